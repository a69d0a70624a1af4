#include "cyl/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cyl {

namespace {

std::string strip_space(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

std::vector<Letter> parse_letters(const std::string& seg) {
    std::vector<Letter> out;
    if (seg.empty()) return out;
    if (seg.find(',') != std::string::npos) {
        std::stringstream ss(seg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("empty letter in word: " + seg);
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("bad letter: " + tok);
            out.push_back(v);
        }
        return out;
    }
    for (char c : seg) {
        switch (c) {
            case '0': out.push_back(0); break;
            case '1': case '+': out.push_back(1); break;
            case 'T': case '-': out.push_back(-1); break;
            default:
                throw std::invalid_argument(std::string("bad letter '") + c +
                                            "' in word: " + seg);
        }
    }
    return out;
}

Alphabet infer_alphabet(const std::vector<Letter>& u, const std::vector<Letter>& v) {
    int lo = 0, hi = 1;
    for (const auto* part : {&u, &v})
        for (Letter a : *part) {
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
    if (lo >= 0) return kBinary;
    if (lo >= -1 && hi <= 1) return kTernary;
    int m = std::max(-lo, hi);
    return Alphabet{-m, m};
}

EPWord assemble_word(const std::string& text, const Alphabet* alpha) {
    std::string s = strip_space(text);
    std::size_t lparen = s.find('(');
    if (lparen == std::string::npos || s.back() != ')' || s.size() < lparen + 3)
        throw std::invalid_argument("word must end with a parenthesized period: " + text);
    std::vector<Letter> u = parse_letters(s.substr(0, lparen));
    std::vector<Letter> v = parse_letters(s.substr(lparen + 1, s.size() - lparen - 2));
    if (v.empty()) throw std::invalid_argument("empty period in word: " + text);
    Alphabet a = alpha ? *alpha : infer_alphabet(u, v);
    for (const auto* part : {&u, &v})
        for (Letter x : *part)
            if (!a.contains(x)) throw std::invalid_argument("letter outside alphabet: " + text);
    return EPWord(FiniteWord(a, u), FiniteWord(a, v));
}

bool compact_printable(const Alphabet& a) { return a.lo >= -1 && a.hi <= 1; }

std::string letters_to_string(const FiniteWord& w) {
    std::string out;
    if (compact_printable(w.alphabet())) {
        for (Letter a : w) out.push_back(a == -1 ? 'T' : static_cast<char>('0' + a));
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(w[i]);
    }
    return out;
}

Orientation orient_from_string(const std::string& s) {
    if (s == "natural") return Orientation::natural;
    if (s == "reversed") return Orientation::reversed;
    throw std::invalid_argument("bad orientation: " + s);
}

}  // namespace

EPWord parse_word(const std::string& text) { return assemble_word(text, nullptr); }

EPWord parse_word(const std::string& text, const Alphabet& alpha) {
    return assemble_word(text, &alpha);
}

std::string print_word(const FiniteWord& w) { return letters_to_string(w); }

std::string print_word(const EPWord& a) {
    return letters_to_string(a.preperiod()) + "(" + letters_to_string(a.period()) + ")";
}

Order resolve_order(const std::string& spec) {
    static const char* kBuiltins[] = {"lex", "alt",  "uni", "flip",
                                      "lex3", "alt3", "bi",  "biflip"};
    for (const char* name : kBuiltins)
        if (spec == name) return Order::automaton(builtin_order(spec));
    if (spec.rfind("eorder:", 0) == 0) {
        std::string body = spec.substr(7);
        EPWord e = parse_word(body, kTernary);
        return Order::automaton(eorder_automaton(e));
    }
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("unknown order spec: " + spec);
    std::stringstream buf;
    buf << in.rdbuf();
    return Order::automaton(automaton_from_json_text(buf.str()));
}

std::string automaton_json(const DirectionAutomaton& aut) {
    nlohmann::json j;
    j["alphabet"] = aut.alphabet_size();
    j["initial"] = aut.initial();
    Alphabet alpha = aut.alphabet();
    nlohmann::json states = nlohmann::json::array();
    for (int q = 0; q < aut.state_count(); ++q) {
        nlohmann::json st;
        st["orient"] = aut.orient(q) == Orientation::natural ? "natural" : "reversed";
        nlohmann::json next;
        for (Letter a = alpha.lo; a <= alpha.hi; ++a)
            next[std::to_string(a)] = aut.next(q, a);
        st["next"] = next;
        states.push_back(st);
    }
    j["states"] = states;
    return j.dump(2);
}

DirectionAutomaton automaton_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int alphabet_size = j.at("alphabet").get<int>();
    int initial = j.at("initial").get<int>();
    if (alphabet_size != 2 && alphabet_size != 3)
        throw std::invalid_argument("alphabet must be 2 or 3");
    Alphabet alpha = alphabet_size == 2 ? kBinary : kTernary;
    std::vector<DirectionAutomaton::State> states;
    for (const auto& st : j.at("states")) {
        DirectionAutomaton::State state;
        state.orient = orient_from_string(st.at("orient").get<std::string>());
        const auto& next = st.at("next");
        for (Letter a = alpha.lo; a <= alpha.hi; ++a)
            state.next[static_cast<std::size_t>(a - alpha.lo)] =
                next.at(std::to_string(a)).get<int>();
        states.push_back(state);
    }
    return DirectionAutomaton(alphabet_size, initial, std::move(states));
}

namespace {

// Decimal only. Leading zeros are stripped before the big-int conversion,
// which would otherwise read them as an octal prefix.
BigInt parse_integer(const std::string& text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    if (i == text.size()) throw std::invalid_argument("bad number: " + text);
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw std::invalid_argument("bad number: " + text);
    while (i + 1 < text.size() && text[i] == '0') ++i;
    BigInt mag(text.substr(i));
    return neg ? BigInt(-mag) : mag;
}

}  // namespace

BigRational parse_rational(const std::string& text) {
    std::string s = strip_space(text);
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_integer(s.substr(0, slash));
        BigInt den = parse_integer(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return BigRational(num, den);
    }
    std::size_t epos = s.find_first_of("eE");
    long exp10 = 0;
    std::string mant = s;
    if (epos != std::string::npos) {
        BigInt e = parse_integer(s.substr(epos + 1));
        if (e > 16384 || e < -16384) throw std::invalid_argument("exponent out of range: " + text);
        exp10 = e.convert_to<long>();
        mant = s.substr(0, epos);
    }
    std::size_t dot = mant.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(mant.size() - dot - 1);
        mant.erase(dot, 1);
    }
    BigRational value{parse_integer(mant)};
    BigRational scale = 1;
    for (long i = 0; i < std::labs(exp10); ++i) scale *= 10;
    return exp10 >= 0 ? BigRational(value * scale) : BigRational(value / scale);
}

std::string format_rational(const BigRational& x) {
    std::string out = numerator(x).str();
    if (denominator(x) != 1) out += "/" + denominator(x).str();
    return out;
}

std::string format_interval(const RealInterval& iv) {
    return "[" + format_rational(iv.lo) + "," + format_rational(iv.hi) + "]";
}

}  // namespace cyl
