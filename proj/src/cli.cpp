#include "cyl/cli.hpp"

#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyl/analysis.hpp"
#include "cyl/io.hpp"
#include "cyl/maccum.hpp"
#include "cyl/orders.hpp"
#include "cyl/spectra.hpp"
#include "cyl/subst.hpp"
#include "cyl/supwords.hpp"
#include "cyl/symabs.hpp"
#include "cyl/words.hpp"

namespace cyl {

namespace {

const char* status_name(MaccumStatus s) {
    switch (s) {
        case MaccumStatus::exact: return "exact";
        case MaccumStatus::truncated: return "truncated";
        case MaccumStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

const char* sigma_name(SigmaMap m) {
    switch (m) {
        case SigmaMap::rho0: return "rho0";
        case SigmaMap::rho1: return "rho1";
        case SigmaMap::rho2: return "rho2";
        case SigmaMap::tau01: return "tau01";
    }
    return "unknown";
}

nlohmann::json maccum_json(const MaccumResult& r) {
    nlohmann::json j;
    auto pairs = nlohmann::json::array();
    for (const auto& [a, b] : r.expansion.pairs) pairs.push_back({a, b});
    j["pairs"] = pairs;
    j["terminal"] = r.expansion.terminal ? nlohmann::json(r.expansion.pairs.size())
                                         : nlohmann::json(nullptr);
    j["terminal_extra_j"] = r.expansion.terminal_extra_j
                                ? nlohmann::json(*r.expansion.terminal_extra_j)
                                : nlohmann::json(nullptr);
    j["status"] = status_name(r.status);
    j["prefix"] = print_word(r.m_prefix);
    auto disc = nlohmann::json::array();
    for (const EPWord& w : r.discrete) disc.push_back(print_word(w));
    j["discrete"] = disc;
    return j;
}

EPWord random_ep_word(std::mt19937_64& rng, const Alphabet& alpha) {
    std::uniform_int_distribution<int> len_pre(0, 5), len_per(1, 5);
    std::uniform_int_distribution<int> letter(alpha.lo, alpha.hi);
    FiniteWord u(alpha), v(alpha);
    int np = len_pre(rng), nv = len_per(rng);
    for (int i = 0; i < np; ++i) u.push_back(letter(rng));
    for (int i = 0; i < nv; ++i) v.push_back(letter(rng));
    return EPWord(u, v);
}

std::vector<std::pair<int, int>> random_pairs(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::pair<int, int>> pairs;
    std::uniform_int_distribution<int> pick_j(0, 2);
    for (std::size_t i = 0; i < n; ++i) {
        int j = pick_j(rng);
        std::uniform_int_distribution<int> pick_k(j + 1, 3);
        pairs.emplace_back(j, pick_k(rng));
    }
    return pairs;
}

std::size_t verify_axioms(std::mt19937_64& rng, std::size_t iters) {
    std::vector<std::pair<std::string, DirectionAutomaton>> auts;
    for (const char* name : {"lex", "alt", "uni", "flip", "lex3", "alt3", "bi", "biflip"})
        auts.emplace_back(name, builtin_order(name));
    auts.emplace_back("pullback_tau(alt,0,2)", pullback_tau(builtin_order("alt"), 0, 2));
    auts.emplace_back("pullback_tau(uni,0,1)", pullback_tau(builtin_order("uni"), 0, 1));
    auts.emplace_back("pullback_tau(flip,1,3)", pullback_tau(builtin_order("flip"), 1, 3));
    auts.emplace_back("pullback_rho(lex3,rho2)", pullback_rho(builtin_order("lex3"), SigmaMap::rho2));
    auts.emplace_back("pullback_rho(alt3,rho1)", pullback_rho(builtin_order("alt3"), SigmaMap::rho1));
    auts.emplace_back("pullback_rho(biflip,rho0)", pullback_rho(builtin_order("biflip"), SigmaMap::rho0));
    auts.emplace_back("pullback_rho(bi,tau01)", pullback_rho(builtin_order("bi"), SigmaMap::tau01));
    std::size_t per = (iters + auts.size() - 1) / auts.size();
    std::size_t cases = 0;
    for (const auto& [name, aut] : auts) {
        Order order = Order::automaton(aut);
        Alphabet alpha = aut.alphabet();
        std::vector<std::array<EPWord, 3>> triples;
        triples.reserve(per);
        for (std::size_t i = 0; i < per; ++i)
            triples.push_back({random_ep_word(rng, alpha), random_ep_word(rng, alpha),
                               random_ep_word(rng, alpha)});
        if (!check_cylinder_axiom(order, triples))
            throw std::runtime_error("cylinder axiom violated for " + name);
        cases += per;
    }
    return cases;
}

std::size_t verify_lemma_wn(std::mt19937_64& rng, std::size_t iters) {
    std::size_t cases = 0;
    for (std::size_t i = 0; i < iters; ++i) {
        auto pairs = random_pairs(rng, 6);
        for (std::size_t n = 0; n <= 6; ++n) {
            WnCheck check = wn_words(pairs, n);
            if (!check.contained) {
                std::string desc;
                for (auto& [j, k] : pairs)
                    desc += "(" + std::to_string(j) + "," + std::to_string(k) + ")";
                throw std::runtime_error("w_n containment failed at n=" +
                                         std::to_string(n) + " for " + desc);
            }
            ++cases;
        }
    }
    return cases;
}

std::size_t verify_conjugacy() {
    std::size_t cases = 0;
    for (int k = 1; k <= 5; ++k) {
        for (std::size_t len = 0; len <= 10; ++len) {
            for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
                FiniteWord w(kBinary);
                for (std::size_t i = 0; i < len; ++i)
                    w.push_back((bits >> i) & 1 ? 1 : 0);
                if (!conjugacy_check(k, w))
                    throw std::runtime_error("conjugacy identity failed at k=" +
                                             std::to_string(k) + " w=" + print_word(w));
                ++cases;
            }
        }
    }
    return cases;
}

std::size_t verify_roundtrip(std::mt19937_64& rng, std::size_t iters) {
    std::uniform_int_distribution<std::size_t> pick_depth(1, 5);
    for (std::size_t i = 0; i < iters; ++i) {
        std::size_t depth = pick_depth(rng);
        auto pairs = random_pairs(rng, depth);
        DirectionAutomaton aut = order_from_sadic(pairs, std::nullopt, depth);
        MaccumOptions opt;
        opt.levels = depth;
        opt.prefix_len = 8;
        opt.discrete_count = 0;
        MaccumResult res = maccum(Order::automaton(aut), opt);
        if (res.expansion.pairs.size() != depth)
            throw std::runtime_error("round trip lost levels");
        for (std::size_t n = 0; n < depth; ++n)
            if (res.expansion.pairs[n] != pairs[n]) {
                std::string desc;
                for (auto& [j, k] : pairs)
                    desc += "(" + std::to_string(j) + "," + std::to_string(k) + ")";
                throw std::runtime_error("round trip diverged at level " +
                                         std::to_string(n) + " for " + desc);
            }
    }
    return iters;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    CommandResult result;
    std::ostringstream out;
    int status_code = 0;

    CLI::App app{"exact computations with cylinder orders on infinite words"};
    app.name("cylorder");
    app.require_subcommand(1);

    std::string order_spec, word_text, x_text, tol_text = "1e-9";
    std::size_t levels = 32, prefix_len = 64, count = 4, points = 4;
    std::size_t max_period = 8, iters = 1000, flen = 0;
    std::size_t census_n = 2;
    int q = 2, bits = 40;
    std::uint64_t seed = 12345;
    bool as_json = false, want_limsup = false;

    auto* order_cmd = app.add_subcommand("order", "inspect an order specification");
    order_cmd->require_subcommand(1);
    auto* show_cmd = order_cmd->add_subcommand("show", "print the direction automaton");
    show_cmd->add_option("--order", order_spec, "order spec")->required();
    show_cmd->add_flag("--json", as_json, "JSON output");
    show_cmd->callback([&] {
        Order order = resolve_order(order_spec);
        const DirectionAutomaton* aut = order.automaton_ptr();
        if (!aut) throw std::invalid_argument("order has no automaton presentation");
        if (as_json) {
            out << automaton_json(*aut) << "\n";
            return;
        }
        Alphabet alpha = aut->alphabet();
        out << "alphabet " << aut->alphabet_size() << " initial " << aut->initial() << "\n";
        for (int s = 0; s < aut->state_count(); ++s) {
            out << "state " << s << ": "
                << (aut->orient(s) == Orientation::natural ? "natural" : "reversed");
            for (Letter a = alpha.lo; a <= alpha.hi; ++a)
                out << "  " << a << "->" << aut->next(s, a);
            out << "\n";
        }
    });

    auto* mac_cmd = app.add_subcommand("maccum", "smallest accumulation point of the sup-word set");
    mac_cmd->add_option("--order", order_spec, "order spec")->required();
    mac_cmd->add_option("--levels", levels, "expansion levels to compute");
    mac_cmd->add_option("--prefix", prefix_len, "prefix letters to print");
    mac_cmd->add_flag("--json", as_json, "JSON output");
    mac_cmd->callback([&] {
        Order order = resolve_order(order_spec);
        MaccumOptions opt;
        opt.levels = levels;
        opt.prefix_len = prefix_len;
        MaccumResult res = maccum(order, opt);
        if (res.status == MaccumStatus::inconclusive) status_code = 2;
        if (as_json) {
            out << maccum_json(res).dump(2) << "\n";
        } else {
            out << print_word(res.m_prefix) << "\n";
        }
    });

    auto* disc_cmd = app.add_subcommand("discrete", "discrete part below the accumulation point");
    disc_cmd->add_option("--order", order_spec, "order spec")->required();
    disc_cmd->add_option("--count", count, "number of elements");
    disc_cmd->add_option("--levels", levels, "expansion levels to compute");
    disc_cmd->add_flag("--json", as_json, "JSON output");
    disc_cmd->callback([&] {
        Order order = resolve_order(order_spec);
        MaccumOptions opt;
        opt.levels = levels;
        opt.discrete_count = 0;
        MaccumResult res = maccum(order, opt);
        if (res.status == MaccumStatus::inconclusive) status_code = 2;
        std::vector<EPWord> elements = discrete_part(res.expansion, count);
        if (as_json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const EPWord& w : elements) arr.push_back(print_word(w));
            out << nlohmann::json{{"discrete", arr}}.dump(2) << "\n";
        } else {
            for (const EPWord& w : elements) out << print_word(w) << "\n";
        }
    });

    auto* sup_cmd = app.add_subcommand("supword", "sup or limsup word of a tail set");
    sup_cmd->add_option("--order", order_spec, "order spec")->required();
    sup_cmd->add_option("--word", word_text, "eventually periodic word u(v)")->required();
    sup_cmd->add_flag("--limsup", want_limsup, "limsup instead of sup");
    sup_cmd->add_flag("--json", as_json, "JSON output");
    sup_cmd->callback([&] {
        Order order = resolve_order(order_spec);
        EPWord a = parse_word(word_text, order.alphabet());
        EPWord s = want_limsup ? limsup_word(order, a) : sup_word(order, a);
        if (as_json)
            out << nlohmann::json{{"word", print_word(s)}}.dump(2) << "\n";
        else
            out << print_word(s) << "\n";
    });

    auto* mem_cmd = app.add_subcommand("member", "sup-word set membership");
    mem_cmd->add_option("--order", order_spec, "order spec")->required();
    mem_cmd->add_option("--word", word_text, "eventually periodic word u(v)")->required();
    mem_cmd->add_flag("--json", as_json, "JSON output");
    mem_cmd->callback([&] {
        Order order = resolve_order(order_spec);
        EPWord a = parse_word(word_text, order.alphabet());
        bool member = is_member(order, a);
        if (as_json)
            out << nlohmann::json{{"member", member}}.dump(2) << "\n";
        else
            out << (member ? "true" : "false") << "\n";
    });

    auto* enum_cmd = app.add_subcommand("enumerate", "periodic members up to a period bound");
    enum_cmd->add_option("--order", order_spec, "order spec")->required();
    enum_cmd->add_option("--max-period", max_period, "largest primitive period");
    enum_cmd->add_flag("--json", as_json, "JSON output");
    enum_cmd->callback([&] {
        Order order = resolve_order(order_spec);
        std::vector<EPWord> members = enumerate_members(order, max_period);
        if (as_json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const EPWord& w : members) arr.push_back(print_word(w));
            out << nlohmann::json{{"members", arr}}.dump(2) << "\n";
        } else {
            for (const EPWord& w : members) out << print_word(w) << "\n";
        }
    });

    auto* sym_cmd = app.add_subcommand("symabs", "symmetrized accumulation point of a ternary order");
    sym_cmd->add_option("--order", order_spec, "ternary order spec")->required();
    sym_cmd->add_option("--levels", levels, "expansion levels to compute");
    sym_cmd->add_option("--prefix", prefix_len, "prefix letters to print");
    sym_cmd->add_flag("--json", as_json, "JSON output");
    sym_cmd->callback([&] {
        Order order = resolve_order(order_spec);
        MaccumOptions opt;
        opt.levels = levels;
        opt.prefix_len = prefix_len;
        SymResult res = m_abs(order, opt);
        if (res.inner.status == MaccumStatus::inconclusive) status_code = 2;
        if (as_json) {
            nlohmann::json j = maccum_json(res.inner);
            j["sigma"] = sigma_name(res.map);
            j["prefix"] = print_word(res.m_abs_prefix);
            out << j.dump(2) << "\n";
        } else {
            out << print_word(res.m_abs_prefix) << "\n";
        }
    });

    auto* spectrum_cmd = app.add_subcommand("spectrum", "multiplicative spectrum computations");
    spectrum_cmd->require_subcommand(1);

    auto* lag_cmd = spectrum_cmd->add_subcommand("lagrange", "discrete spectrum values");
    lag_cmd->add_option("--q", q, "integer base >= 2");
    lag_cmd->add_option("--points", points, "number of values");
    lag_cmd->add_flag("--json", as_json, "JSON output");
    lag_cmd->callback([&] {
        std::vector<BigRational> values = lagrange_discrete(q, points);
        if (as_json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const BigRational& v : values) arr.push_back(format_rational(v));
            out << nlohmann::json{{"values", arr}}.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < values.size(); ++i)
                out << (i ? ", " : "") << format_rational(values[i]);
            out << "\n";
        }
    });

    auto* mt_cmd = spectrum_cmd->add_subcommand("mtilde", "smallest accumulation point of the spectrum");
    mt_cmd->add_option("--q", q, "integer base >= 2");
    mt_cmd->add_option("--bits", bits, "enclosure precision in bits");
    mt_cmd->add_flag("--json", as_json, "JSON output");
    mt_cmd->callback([&] {
        RealInterval iv = mtilde(q, bits);
        if (as_json)
            out << nlohmann::json{{"lo", format_rational(iv.lo)},
                                  {"hi", format_rational(iv.hi)}}
                       .dump(2)
                << "\n";
        else
            out << format_interval(iv) << "\n";
    });

    auto* val_cmd = spectrum_cmd->add_subcommand("value", "limsup_n ||x q^n|| exactly");
    val_cmd->add_option("--q", q, "integer base >= 2");
    val_cmd->add_option("--x", x_text, "rational x, e.g. 1/3")->required();
    val_cmd->add_flag("--json", as_json, "JSON output");
    val_cmd->callback([&] {
        BigRational value = lagrange_value(parse_rational(x_text), q);
        if (as_json)
            out << nlohmann::json{{"value", format_rational(value)}}.dump(2) << "\n";
        else
            out << format_rational(value) << "\n";
    });

    auto* beta_cmd = spectrum_cmd->add_subcommand("beta", "base recovery from an expansion of 1");
    beta_cmd->add_option("--word", word_text, "binary expansion word u(v)")->required();
    beta_cmd->add_option("--tol", tol_text, "enclosure width, e.g. 1e-9");
    beta_cmd->add_flag("--json", as_json, "JSON output");
    beta_cmd->callback([&] {
        EPWord a = parse_word(word_text, kBinary);
        RealInterval iv = beta_from_expansion(a, parse_rational(tol_text));
        if (as_json)
            out << nlohmann::json{{"lo", format_rational(iv.lo)},
                                  {"hi", format_rational(iv.hi)}}
                       .dump(2)
                << "\n";
        else
            out << format_interval(iv) << "\n";
    });

    auto* cx_cmd = app.add_subcommand("complexity", "factor complexity of the accumulation word");
    cx_cmd->add_option("--order", order_spec, "order spec")->required();
    cx_cmd->add_option("--n", census_n, "factor length")->required();
    cx_cmd->add_option("--prefix-len", flen, "sample prefix length (default 8n, at least 256)");
    cx_cmd->add_flag("--json", as_json, "JSON output");
    cx_cmd->callback([&] {
        Order order = resolve_order(order_spec);
        std::size_t sample_len = flen ? flen : std::max<std::size_t>(256, 8 * census_n);
        MaccumOptions opt;
        opt.levels = levels;
        opt.prefix_len = sample_len;
        opt.discrete_count = 0;
        FiniteWord sample;
        if (order.alphabet() == kTernary)
            sample = m_abs(order, opt).m_abs_prefix;
        else
            sample = maccum(order, opt).m_prefix;
        FactorCensus census = factor_complexity(sample, census_n);
        if (as_json)
            out << nlohmann::json{{"n", census.n},
                                  {"count", census.count},
                                  {"stabilized", census.stabilized}}
                       .dump(2)
                << "\n";
        else
            out << "p(" << census.n << ") = " << census.count
                << (census.stabilized ? " stabilized" : " unstable") << "\n";
    });

    auto* verify_cmd = app.add_subcommand("verify", "randomized and exhaustive identity sweeps");
    verify_cmd->require_subcommand(1);
    auto add_sweep = [&](const char* name, const char* desc, auto fn) {
        auto* sub = verify_cmd->add_subcommand(name, desc);
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--iters", iters, "iterations");
        sub->callback([&, fn] {
            std::mt19937_64 rng(seed);
            std::size_t cases = fn(rng);
            out << "ok (" << cases << " cases)\n";
        });
        return sub;
    };
    add_sweep("axioms", "cylinder axiom on builtins and pullbacks",
              [&](std::mt19937_64& rng) { return verify_axioms(rng, iters); });
    add_sweep("lemma-wn", "boundary word containments for random chains",
              [&](std::mt19937_64& rng) { return verify_lemma_wn(rng, iters); });
    add_sweep("conjugacy", "theta/tau conjugacy identity, exhaustive",
              [&](std::mt19937_64&) { return verify_conjugacy(); });
    add_sweep("roundtrip", "order_from_sadic / maccum round trips",
              [&](std::mt19937_64& rng) { return verify_roundtrip(rng, iters); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out, help_err;
        int code = app.exit(e, help_out, help_err);
        result.out = help_out.str();
        result.err = help_err.str();
        result.exit_code = code == 0 ? 0 : 1;
        return result;
    } catch (const std::exception& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 1;
        return result;
    }
    result.out = out.str();
    result.exit_code = status_code;
    return result;
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    CommandResult result = run(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}

}  // namespace cyl
