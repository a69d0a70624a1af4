#include <doctest.h>

#include <random>
#include <utility>
#include <vector>

#include "cyl/maccum.hpp"
#include "cyl/orders.hpp"
#include "cyl/supwords.hpp"
#include "cyl/words.hpp"
#include "helpers.hpp"

using namespace cyl;
using cyltest::ep;
using cyltest::fw;

namespace {

Order builtin(const std::string& name) { return Order::automaton(builtin_order(name)); }

MaccumResult run(const std::string& name, std::size_t levels, std::size_t prefix) {
    MaccumOptions opt;
    opt.levels = levels;
    opt.prefix_len = prefix;
    return maccum(builtin(name), opt);
}

}  // namespace

TEST_CASE("lex reaches the terminal form immediately") {
    MaccumResult r = run("lex", 8, 8);
    CHECK(r.status == MaccumStatus::exact);
    CHECK(r.expansion.terminal);
    CHECK(r.expansion.pairs.empty());
    CHECK(!r.expansion.terminal_extra_j.has_value());
    CHECK(r.m_prefix == fw("10000000"));
}

TEST_CASE("alt records the constant pair stream and the golden prefix") {
    MaccumResult r = run("alt", 8, 21);
    CHECK(r.status == MaccumStatus::truncated);
    REQUIRE(r.expansion.pairs.size() == 8);
    for (auto [j, k] : r.expansion.pairs) {
        CHECK(j == 0);
        CHECK(k == 2);
    }
    CHECK(r.m_prefix == fw("100111001001001110011"));
}

TEST_CASE("uni and flip record their pair streams and prefixes") {
    MaccumResult u = run("uni", 8, 32);
    REQUIRE(u.expansion.pairs.size() == 8);
    CHECK(u.expansion.pairs[0] == std::pair{0, 1});
    for (std::size_t i = 1; i < 8; ++i) CHECK(u.expansion.pairs[i] == std::pair{0, 2});
    CHECK(u.m_prefix == fw("10111010101110111011101010111010"));

    MaccumResult f = run("flip", 8, 48);
    REQUIRE(f.expansion.pairs.size() == 8);
    CHECK(f.expansion.pairs[0] == std::pair{1, 3});
    for (std::size_t i = 1; i < 8; ++i) CHECK(f.expansion.pairs[i] == std::pair{0, 2});
    CHECK(f.m_prefix == fw("100010101000100010001010100010101000101010001000"));
}

TEST_CASE("level scans match direct cylinder comparisons") {
    // The recorded (j, k) must be the two smallest qualifying indices of the
    // order itself, checked here straight from cylinder_less.
    for (const char* name : {"alt", "uni", "flip"}) {
        Order order = builtin(name);
        MaccumResult r = run(name, 1, 4);
        REQUIRE(r.expansion.pairs.size() == 1);
        auto [j, k] = r.expansion.pairs[0];
        std::vector<int> qualifying;
        for (int idx = 0; idx <= k + 2; ++idx) {
            FiniteWord x = fw("1"), y = fw("1");
            for (int i = 0; i < idx; ++i) {
                x.push_back(0);
                y.push_back(0);
            }
            x.push_back(1);
            y.push_back(0);
            if (order.cylinder_less(x, y)) qualifying.push_back(idx);
        }
        REQUIRE(qualifying.size() >= 2);
        CHECK(qualifying[0] == j);
        CHECK(qualifying[1] == k);
    }
}

TEST_CASE("prefixes are stable as the level budget grows") {
    for (const char* name : {"alt", "uni", "flip"}) {
        FiniteWord prev;
        for (std::size_t levels = 1; levels <= 8; ++levels) {
            MaccumOptions opt;
            opt.levels = levels;
            opt.prefix_len = 0;  // take what the levels pin down
            opt.discrete_count = 0;
            MaccumResult r = maccum(builtin(name), opt);
            FiniteWord cur = m_prefix_of(r.expansion, 2 * levels);
            CHECK(cur.starts_with(prev));
            prev = m_prefix_of(r.expansion, 2 * levels);
        }
    }
}

TEST_CASE("discrete part of the worked orders") {
    MaccumResult alt = run("alt", 8, 21);
    auto d = discrete_part(alt.expansion, 4);
    REQUIRE(d.size() == 4);
    CHECK(d[0] == ep("(0)"));
    CHECK(d[1] == ep("(1)"));
    CHECK(d[2] == ep("(100)"));
    CHECK(d[3] == ep("(10011)"));

    auto lex = run("lex", 4, 8);
    auto dl = discrete_part(lex.expansion, 1);
    REQUIRE(dl.size() == 1);
    CHECK(dl[0] == ep("(0)"));
    // Terminal expansions clamp instead of inventing further elements.
    CHECK(discrete_part(lex.expansion, 5).size() == 1);

    auto du = discrete_part(run("uni", 8, 8).expansion, 3);
    REQUIRE(du.size() == 3);
    CHECK(du[0] == ep("(0)"));
    CHECK(du[1] == ep("(1)"));
    CHECK(du[2] == ep("(10)"));

    auto df = discrete_part(run("flip", 8, 8).expansion, 3);
    REQUIRE(df.size() == 3);
    CHECK(df[0] == ep("(0)"));
    CHECK(df[1] == ep("(10)"));
    CHECK(df[2] == ep("(1000)"));

    // An open expansion cannot serve more elements than its levels know.
    auto shallow = run("alt", 2, 4);
    CHECK_THROWS_AS(discrete_part(shallow.expansion, 9), std::invalid_argument);
}

TEST_CASE("discrete elements are members sitting below the m cylinder") {
    for (const char* name : {"alt", "uni", "flip"}) {
        Order order = builtin(name);
        MaccumResult r = run(name, 10, 64);
        auto d = discrete_part(r.expansion, 5);
        REQUIRE(d.size() == 5);
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(is_member(order, d[i]));
            CHECK(below_m_cylinder(order, d[i], r.m_prefix));
            if (i + 1 < d.size()) CHECK(order.compare(d[i], d[i + 1]) == Ordering::less);
        }
    }
}

TEST_CASE("below_m_cylinder rejects words at or above the prefix") {
    MaccumResult r = run("alt", 10, 32);
    Order alt = builtin("alt");
    CHECK(below_m_cylinder(alt, ep("(100)"), r.m_prefix));
    // (10)^inf lies above the accumulation point under alt.
    CHECK(!below_m_cylinder(alt, ep("(10)"), r.m_prefix));
    // A word extending the prefix itself is not strictly below the cylinder.
    CHECK(!below_m_cylinder(alt, EPWord(r.m_prefix, fw("0")), r.m_prefix));
}

TEST_CASE("terminal data reconstructs the accumulation point") {
    // A synthetic terminal order at depth 2 with an extra qualifying index.
    std::vector<std::pair<int, int>> pairs = {{0, 2}, {1, 3}};
    DirectionAutomaton aut = order_from_sadic(pairs, 2, 2);
    MaccumResult r = maccum(Order::automaton(aut), {.levels = 8, .prefix_len = 16});
    CHECK(r.status == MaccumStatus::exact);
    CHECK(r.expansion.terminal);
    CHECK(r.expansion.pairs == pairs);
    // m = sigma_[1,2](1 0^inf).
    Substitution chain = compose_tau_chain(pairs, 2);
    EPWord m = chain.apply(ep("1(0)"));
    CHECK(r.m_prefix == m.prefix(16));
}

TEST_CASE("oracle orders reproduce the automaton expansion") {
    Order alt = builtin("alt");
    Order oracle = Order::oracle(
        [&alt](const EPWord& a, const EPWord& b) { return alt.compare(a, b); }, kBinary);
    MaccumOptions opt;
    opt.levels = 6;
    opt.prefix_len = 16;
    MaccumResult via_oracle = maccum(oracle, opt);
    MaccumResult via_aut = maccum(alt, opt);
    CHECK(via_oracle.expansion.pairs == via_aut.expansion.pairs);
    CHECK(via_oracle.m_prefix == via_aut.m_prefix);
    for (const LevelRecord& rec : via_oracle.level_log) CHECK(rec.scanned_up_to <= opt.j_max);
}

TEST_CASE("oracle orders admit defeat instead of guessing terminality") {
    // Under lex no index ever qualifies; a black-box comparator cannot prove
    // that, so the search must come back inconclusive rather than terminal.
    Order lex = builtin("lex");
    Order oracle = Order::oracle(
        [&lex](const EPWord& a, const EPWord& b) { return lex.compare(a, b); }, kBinary,
        {.j_max = 12});
    MaccumResult r = maccum(oracle, {.levels = 4, .prefix_len = 4});
    CHECK(r.status == MaccumStatus::inconclusive);
    CHECK(!r.expansion.terminal);
    CHECK(r.expansion.pairs.empty());
    // The automaton presentation of the same order proves terminality.
    MaccumResult exact = maccum(lex, {.levels = 4, .prefix_len = 4});
    CHECK(exact.status == MaccumStatus::exact);
    CHECK(exact.expansion.terminal);
}

TEST_CASE("orders that put 1^inf below 0^inf are rejected with advice") {
    // alt with every orientation reversed orders 1^inf below 0^inf.
    DirectionAutomaton alt = builtin_order("alt");
    std::vector<DirectionAutomaton::State> states;
    for (int q = 0; q < alt.state_count(); ++q) {
        DirectionAutomaton::State s = alt.state(q);
        s.orient = s.orient == Orientation::natural ? Orientation::reversed : Orientation::natural;
        states.push_back(s);
    }
    DirectionAutomaton reversed(2, alt.initial(), states);
    CHECK_THROWS_WITH_AS(maccum(Order::automaton(reversed)),
                         "order places 1^inf below 0^inf; flip letters and retry",
                         std::invalid_argument);
    CHECK_THROWS_AS(maccum(builtin("lex3")), std::invalid_argument);
}

TEST_CASE("random round trips recover the pair stream") {
    std::mt19937_64 rng(1234);
    for (int it = 0; it < 60; ++it) {
        std::uniform_int_distribution<std::size_t> dd(1, 5);
        std::size_t depth = dd(rng);
        auto pairs = cyltest::random_pairs(rng, depth);
        DirectionAutomaton aut = order_from_sadic(pairs, std::nullopt, depth);
        MaccumOptions opt;
        opt.levels = depth;
        opt.prefix_len = 4;
        opt.discrete_count = 0;
        MaccumResult r = maccum(Order::automaton(aut), opt);
        REQUIRE(r.expansion.pairs.size() == depth);
        for (std::size_t i = 0; i < depth; ++i) CHECK(r.expansion.pairs[i] == pairs[i]);
    }
}

TEST_CASE("random terminal round trips recover stream and terminal marker") {
    std::mt19937_64 rng(4321);
    for (int it = 0; it < 40; ++it) {
        std::uniform_int_distribution<std::size_t> dd(0, 4);
        std::size_t depth = dd(rng);
        auto pairs = cyltest::random_pairs(rng, depth);
        DirectionAutomaton aut = order_from_sadic(pairs, static_cast<int>(depth), depth);
        MaccumOptions opt;
        opt.levels = depth + 4;
        opt.prefix_len = 4;
        opt.discrete_count = 0;
        MaccumResult r = maccum(Order::automaton(aut), opt);
        CHECK(r.status == MaccumStatus::exact);
        CHECK(r.expansion.terminal);
        CHECK(r.expansion.pairs == pairs);
    }
}

TEST_CASE("requested prefix lengths beyond the computed levels throw") {
    MaccumResult r = run("alt", 2, 4);
    CHECK_THROWS_AS(m_prefix_of(r.expansion, 4096), std::invalid_argument);
}
