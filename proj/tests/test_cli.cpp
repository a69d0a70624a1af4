#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "cyl/cli.hpp"
#include "cyl/io.hpp"
#include "cyl/orders.hpp"
#include "cyl/spectra.hpp"
#include "cyl/words.hpp"
#include "helpers.hpp"

using namespace cyl;
using cyltest::ep;
using cyltest::fw;
using cyltest::random_ep;

namespace {

CommandResult run_cli(std::initializer_list<const char*> args) {
    return run(std::vector<std::string>(args.begin(), args.end()));
}

RealInterval parse_interval(const std::string& text) {
    REQUIRE(text.size() > 2);
    REQUIRE(text.front() == '[');
    std::size_t comma = text.find(',');
    REQUIRE(comma != std::string::npos);
    std::size_t close = text.find(']');
    return RealInterval(parse_rational(text.substr(1, comma - 1)),
                        parse_rational(text.substr(comma + 1, close - comma - 1)));
}

}  // namespace

TEST_CASE("word parsing and printing round trip") {
    CHECK(parse_word("(10)") == EPWord::pure(fw("10")));
    CHECK(parse_word("1(0)") == EPWord(fw("1"), fw("0")));
    // Parsing canonicalizes: 100(10) and 10(01) are the same word.
    CHECK(parse_word("100(10)") == parse_word("10(01)"));
    CHECK(print_word(parse_word("100(10)")) == "10(01)");
    CHECK(print_word(ep("(1,-1)", kTernary)) == "(1T)");
    CHECK(print_word(fw("10T", kTernary)) == "10T");
    // Wider alphabets print comma separated.
    EPWord wide = digits_symmetric(BigRational(2, 5), 4);
    CHECK(print_word(wide) == "(2,-2)");
    CHECK(parse_word("(2,-2)") == wide);
    CHECK(parse_word("(+-)", kTernary) == ep("(1,-1)", kTernary));

    std::mt19937_64 rng(2027);
    for (int it = 0; it < 200; ++it) {
        Alphabet alpha = it % 2 ? kBinary : kTernary;
        EPWord a = random_ep(rng, 3, 4, alpha);
        CHECK(parse_word(print_word(a)) == a);
    }

    CHECK_THROWS_AS(parse_word("10"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("1()"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("1(2)", kBinary), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("(1x)"), std::invalid_argument);
}

TEST_CASE("rational parsing accepts fractions, decimals and exponents") {
    CHECK(parse_rational("1/3") == BigRational(1, 3));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-2") == -2);
    CHECK(parse_rational("0.25") == BigRational(1, 4));
    CHECK(parse_rational("1e-9") == BigRational(BigInt(1), BigInt(1000000000)));
    CHECK(parse_rational("2.5e2") == 250);
    CHECK(parse_rational("-0.5") == BigRational(-1, 2));
    CHECK(format_rational(BigRational(2, 6)) == "1/3");
    CHECK(format_rational(BigRational(8, 2)) == "4");
    CHECK(format_interval(RealInterval(BigRational(1, 3), BigRational(1, 2))) == "[1/3,1/2]");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("automata survive the JSON round trip") {
    std::mt19937_64 rng(2029);
    for (const char* name : {"alt", "flip", "biflip", "lex3"}) {
        DirectionAutomaton aut = builtin_order(name);
        DirectionAutomaton back = automaton_from_json_text(automaton_json(aut));
        CHECK(back.alphabet_size() == aut.alphabet_size());
        CHECK(back.state_count() == aut.state_count());
        Order a = Order::automaton(aut), b = Order::automaton(back);
        for (int it = 0; it < 50; ++it) {
            EPWord x = random_ep(rng, 3, 4, aut.alphabet());
            EPWord y = random_ep(rng, 3, 4, aut.alphabet());
            CHECK(a.compare(x, y) == b.compare(x, y));
        }
    }
    CHECK_THROWS_AS(automaton_from_json_text("{\"alphabet\":4,\"initial\":0,\"states\":[]}"),
                    std::invalid_argument);
}

TEST_CASE("order specs resolve to builtins, weight words and files") {
    std::mt19937_64 rng(2031);
    Order named = resolve_order("alt");
    Order weighted = resolve_order("eorder:(+-)");
    std::string path = "/tmp/cyl_order_test.json";
    {
        std::ofstream f(path);
        f << automaton_json(builtin_order("alt"));
    }
    Order from_file = resolve_order(path);
    for (int it = 0; it < 100; ++it) {
        EPWord a = random_ep(rng, 3, 4), b = random_ep(rng, 3, 4);
        Ordering expect = named.compare(a, b);
        CHECK(weighted.compare(a, b) == expect);
        CHECK(from_file.compare(a, b) == expect);
    }
    std::remove(path.c_str());
    CHECK_THROWS_AS(resolve_order("certainly-not-an-order"), std::invalid_argument);
}

TEST_CASE("maccum command prints the prefix or the full record") {
    CommandResult r = run_cli({"maccum", "--order", "alt", "--prefix", "21"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "100111001001001110011\n");
    CHECK(r.err.empty());

    CommandResult j = run_cli({"maccum", "--order", "lex", "--json"});
    CHECK(j.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(j.out);
    CHECK(doc["status"] == "exact");
    CHECK(doc["terminal"] == 0);
    CHECK(doc["pairs"].empty());
    CHECK(doc["discrete"][0] == "(0)");

    CommandResult a = run_cli({"maccum", "--order", "alt", "--levels", "3", "--json"});
    nlohmann::json alt = nlohmann::json::parse(a.out);
    CHECK(alt["status"] == "truncated");
    CHECK(alt["terminal"].is_null());
    REQUIRE(alt["pairs"].size() == 3);
    CHECK(alt["pairs"][0][0] == 0);
    CHECK(alt["pairs"][0][1] == 2);
}

TEST_CASE("discrete command lists the elements in order") {
    CommandResult r = run_cli({"discrete", "--order", "alt", "--count", "4"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(0)\n(1)\n(100)\n(10011)\n");
    // Too many elements for the computed levels is a reported error.
    CommandResult bad = run_cli({"discrete", "--order", "alt", "--count", "4", "--levels", "2"});
    CHECK(bad.exit_code == 1);
    CHECK(bad.err == "error: insufficient levels for requested count\n");
}

TEST_CASE("supword, member and enumerate commands") {
    CHECK(run_cli({"supword", "--order", "alt", "--word", "1(100)"}).out == "(100)\n");
    CHECK(run_cli({"supword", "--order", "lex", "--word", "(01)"}).out == "(10)\n");
    CHECK(run_cli({"supword", "--order", "lex", "--word", "111(10)", "--limsup"}).out == "(10)\n");
    CHECK(run_cli({"member", "--order", "alt", "--word", "(10011)"}).out == "true\n");
    CHECK(run_cli({"member", "--order", "lex", "--word", "(01)"}).out == "false\n");

    CommandResult e = run_cli({"enumerate", "--order", "alt", "--max-period", "5"});
    CHECK(e.exit_code == 0);
    std::size_t lines = 0;
    for (char c : e.out) lines += c == '\n';
    CHECK(lines == 14);
    CHECK(e.out.substr(0, 8) == "(0)\n(1)\n");
}

TEST_CASE("symabs command prints the ternary prefix") {
    CommandResult r = run_cli({"symabs", "--order", "lex3", "--prefix", "32"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "10T1T010T01T10T1T01T10T010T1T010\n");
    CommandResult j = run_cli({"symabs", "--order", "bi", "--prefix", "8", "--json"});
    nlohmann::json doc = nlohmann::json::parse(j.out);
    CHECK(doc["sigma"] == "tau01");
}

TEST_CASE("spectrum commands expose the arithmetic") {
    CHECK(run_cli({"spectrum", "lagrange", "--q", "2", "--points", "3"}).out == "0, 1/3, 2/5\n");
    CHECK(run_cli({"spectrum", "value", "--x", "1/3", "--q", "2"}).out == "1/3\n");
    CHECK(run_cli({"spectrum", "beta", "--word", "(1)"}).out == "[2,2]\n");

    CommandResult m = run_cli({"spectrum", "mtilde", "--q", "2", "--bits", "20"});
    CHECK(m.exit_code == 0);
    RealInterval iv = parse_interval(m.out);
    CHECK(iv.width() <= BigRational(1, 1 << 20));
    CHECK(iv.lo <= BigRational(41245404, 100000000));
    CHECK(iv.hi >= BigRational(41245403, 100000000));

    CommandResult b = run_cli({"spectrum", "beta", "--word", "(10)", "--tol", "1e-12"});
    RealInterval phi = parse_interval(b.out);
    CHECK(phi.width() <= BigRational(BigInt(1), BigInt(1000000000000ll)));
    CHECK(phi.lo * phi.lo - phi.lo - 1 <= 0);
    CHECK(phi.hi * phi.hi - phi.hi - 1 >= 0);
}

TEST_CASE("complexity command reports counts and stabilization") {
    CommandResult r = run_cli({"complexity", "--order", "alt", "--n", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "p(2) = 4 stabilized\n");
    CommandResult t = run_cli({"complexity", "--order", "lex3", "--n", "2", "--json"});
    nlohmann::json doc = nlohmann::json::parse(t.out);
    CHECK(doc["n"] == 2);
    CHECK(doc["stabilized"] == true);
}

TEST_CASE("verify commands run their sweeps") {
    CommandResult c = run_cli({"verify", "conjugacy"});
    CHECK(c.exit_code == 0);
    CHECK(c.out == "ok (10235 cases)\n");
    CommandResult a = run_cli({"verify", "axioms", "--iters", "60", "--seed", "7"});
    CHECK(a.exit_code == 0);
    CHECK(a.out.substr(0, 4) == "ok (");
    CommandResult w = run_cli({"verify", "lemma-wn", "--iters", "40"});
    CHECK(w.exit_code == 0);
    CommandResult rt = run_cli({"verify", "roundtrip", "--iters", "20"});
    CHECK(rt.exit_code == 0);
}

TEST_CASE("order show emits a table or JSON") {
    CommandResult r = run_cli({"order", "show", "--order", "alt"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("alphabet 2") != std::string::npos);
    CHECK(r.out.find("reversed") != std::string::npos);
    CommandResult j = run_cli({"order", "show", "--order", "uni", "--json"});
    DirectionAutomaton back = automaton_from_json_text(j.out);
    CHECK(back.alphabet_size() == 2);
}

TEST_CASE("errors and usage problems exit nonzero") {
    CommandResult bad = run_cli({"bogus"});
    CHECK(bad.exit_code == 1);
    CHECK(!bad.err.empty());

    CommandResult help = run_cli({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("maccum") != std::string::npos);

    CommandResult none = run_cli({});
    CHECK(none.exit_code == 1);

    CommandResult word = run_cli({"member", "--order", "alt", "--word", "10"});
    CHECK(word.exit_code == 1);
    CHECK(word.err.substr(0, 7) == "error: ");

    CommandResult missing = run_cli({"maccum"});
    CHECK(missing.exit_code == 1);
}
