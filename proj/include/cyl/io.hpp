#pragma once

#include <string>

#include "cyl/orders.hpp"
#include "cyl/spectra.hpp"
#include "cyl/words.hpp"

namespace cyl {

// Word syntax: preperiod then parenthesized period, e.g. "100(10)" or "(0)".
// Letters are single characters 0, 1, T (= -1), +, - (= +1/-1) in compact
// form; words over wider alphabets list integers separated by commas, as in
// "2,0,-2(1,0)".  The alphabet is inferred (binary, then ternary, then the
// smallest symmetric range) unless given explicitly.
EPWord parse_word(const std::string& text);
EPWord parse_word(const std::string& text, const Alphabet& alpha);

std::string print_word(const FiniteWord& w);
std::string print_word(const EPWord& a);

// Order spec: a builtin name (lex, alt, uni, flip, lex3, alt3, bi, biflip),
// "eorder:<sign word>" such as "eorder:(+-)", or a path to a JSON automaton.
Order resolve_order(const std::string& spec);

// JSON form: {"alphabet":2,"initial":0,"states":[{"orient":"natural",
// "next":{"0":0,"1":1}},...]}; ternary automata use keys "-1","0","1".
std::string automaton_json(const DirectionAutomaton& aut);
DirectionAutomaton automaton_from_json_text(const std::string& text);

// Accepts "p/q", integers, and decimal/scientific forms like "1e-9" or
// "0.25", all converted exactly.
BigRational parse_rational(const std::string& text);

// "p/q", or just "p" for integers.
std::string format_rational(const BigRational& x);

// "[lo,hi]" with exact rational endpoints.
std::string format_interval(const RealInterval& iv);

}  // namespace cyl
