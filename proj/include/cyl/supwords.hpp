#pragma once

#include <cstddef>
#include <vector>

#include "cyl/orders.hpp"
#include "cyl/words.hpp"

namespace cyl {

/// Largest tail of a under the order: the compare-maximum of shift_set(a).
EPWord sup_word(const Order& order, const EPWord& a);

/// Compare-maximum over the rotations of the periodic part only; the
/// preperiod never recurs, so this is the largest tail seen infinitely often.
EPWord limsup_word(const Order& order, const EPWord& a);

/// a belongs to the sup-word set of the order iff it is its own sup.
bool is_member(const Order& order, const EPWord& a);

/// a itself when a >=_lex 0^∞, otherwise -a (letterwise negation).
EPWord abs_word(const EPWord& a);

/// Compare-maximum of { abs(tail) : tail of a } under a ternary order.
EPWord sup_word_abs(const Order& order3, const EPWord& a);

/// Periods n whose prefix repetition approximates a best so far:
/// 2^{-n} d(a, shift(a,n)) < 2^{-i} d(a, shift(a,i)) for all 1 <= i < n.
/// Purely periodic words qualify at their primitive period (distance zero
/// beats every positive value) and at nothing beyond it.
std::vector<std::size_t> approximant_periods(const EPWord& a, std::size_t max_n = 50);

/// All purely periodic members with primitive period <= max_period,
/// ascending under the order. Every rotation class contributes exactly one
/// member (its compare-maximal rotation), so primitive necklaces are
/// enumerated and their sup taken.
std::vector<EPWord> enumerate_members(const Order& order, std::size_t max_period);

}  // namespace cyl
