#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyl/words.hpp"

namespace cyl {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Floor of an exact rational (towards minus infinity, unlike cpp_int division).
BigInt rational_floor(const BigRational& x);

// Closed interval with exact rational endpoints.  All operations that produce
// a RealInterval return an enclosure of the mathematical value.
struct RealInterval {
    BigRational lo;
    BigRational hi;

    RealInterval() = default;
    explicit RealInterval(const BigRational& point) : lo(point), hi(point) {}
    RealInterval(BigRational lo_, BigRational hi_);

    BigRational width() const { return hi - lo; }
    bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
    bool contains(const RealInterval& other) const {
        return lo <= other.lo && other.hi <= hi;
    }
};

// Exact value of sum_{n>=1} a_n q^{-n} for an eventually periodic digit word;
// the periodic tail is summed in closed form.  Requires q > 1.
BigRational pi_exact(const EPWord& a, const BigRational& q);

// Enclosure of pi_beta(prefix . tail) over every tail with |digit| <= max_digit
// and every beta in the given interval.  Requires beta.lo > 1.
RealInterval pi_interval(const FiniteWord& prefix, const RealInterval& beta,
                         int max_digit);

// Symmetric base-q digit expansion of x in [-1/2, 1/2):
//   y_0 = x,  a_k = floor(q y_{k-1} + 1/2),  y_k = q y_{k-1} - a_k.
// The rational orbit is finite, so the result is eventually periodic with
// digits in {-floor(q/2), ..., floor(q/2)}.
EPWord digits_symmetric(const BigRational& x, int q);

// limsup_n ||x q^n|| for rational x, computed exactly as the largest |pi_q|
// over the rotations of the periodic part of the digit expansion of x mod 1.
BigRational lagrange_value(const BigRational& x, int q);

// The bottom of the multiplicative spectrum for integer base q: 0 followed by
// the exact values pi_q(rho2((tau_{0,2}^n(0))^inf)) for n = 0..count-2.
std::vector<BigRational> lagrange_discrete(int q, std::size_t count);

// Enclosure of pi_q applied to the rho2 image of the smallest accumulation
// word of the alternating order, of width at most 2^-precision_bits.  The
// prefix length doubles until the tail bound is small enough.
RealInterval mtilde(int q, int precision_bits);

// Enclosure of the unique beta in (1, 2] with pi_beta(a) = 1, located by
// bisection with exact rational endpoints.  Requires a to be a lexicographic
// sup-word that does not end in 0^inf.
RealInterval beta_from_expansion(const EPWord& a, const BigRational& tol);

// Enclosure of pi_beta(weight_apply(e, prefix) . tail) with |digit| <= 1,
// for a purely periodic weight word e over {-1, +1}.
RealInterval weighted_value(const EPWord& e, const FiniteWord& prefix,
                            const RealInterval& beta);

}  // namespace cyl
