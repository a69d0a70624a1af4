#include "cyl/spectra.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

#include "cyl/orders.hpp"
#include "cyl/subst.hpp"
#include "cyl/supwords.hpp"

namespace cyl {

namespace {

BigRational rat_pow(const BigRational& q, std::size_t n) {
    BigRational acc = 1;
    BigRational base = q;
    for (std::size_t e = n; e > 0; e >>= 1) {
        if (e & 1) acc *= base;
        if (e > 1) base *= base;
    }
    return acc;
}

// sum_{i < |w|} w[i] q^{-(i+1)}, evaluated by Horner from the right.
BigRational horner(const FiniteWord& w, const BigRational& q) {
    BigRational s = 0;
    for (std::size_t i = w.size(); i > 0; --i) s = (s + w[i - 1]) / q;
    return s;
}

RealInterval interval_add(const RealInterval& a, int d) {
    return RealInterval(a.lo + d, a.hi + d);
}

// Quotient interval for numerator over a positive denominator interval.
RealInterval interval_div(const RealInterval& num, const RealInterval& den) {
    BigRational c[4] = {num.lo / den.lo, num.lo / den.hi, num.hi / den.lo,
                        num.hi / den.hi};
    BigRational lo = c[0];
    BigRational hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < lo) lo = c[i];
        if (c[i] > hi) hi = c[i];
    }
    return RealInterval(lo, hi);
}

}  // namespace

BigInt rational_floor(const BigRational& x) {
    BigInt num = numerator(x);
    BigInt den = denominator(x);
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

RealInterval::RealInterval(BigRational lo_, BigRational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
}

BigRational pi_exact(const EPWord& a, const BigRational& q) {
    if (q <= 1) throw std::invalid_argument("pi_exact requires q > 1");
    const FiniteWord& u = a.preperiod();
    const FiniteWord& v = a.period();
    BigRational head = horner(u, q);
    BigRational qs = rat_pow(q, u.size());
    BigRational qp = rat_pow(q, v.size());
    BigRational tail = horner(v, q) / (1 - 1 / qp);
    return head + tail / qs;
}

RealInterval pi_interval(const FiniteWord& prefix, const RealInterval& beta,
                         int max_digit) {
    if (beta.lo <= 1) throw std::invalid_argument("beta interval must exceed 1");
    if (max_digit < 0) throw std::invalid_argument("negative digit bound");
    RealInterval s(BigRational(0));
    for (std::size_t i = prefix.size(); i > 0; --i)
        s = interval_div(interval_add(s, prefix[i - 1]), beta);
    // Tails with |digit| <= max_digit contribute at most
    // max_digit * beta^{-L} / (beta - 1), maximised at beta = beta.lo.
    BigRational tail =
        max_digit / (rat_pow(beta.lo, prefix.size()) * (beta.lo - 1));
    return RealInterval(s.lo - tail, s.hi + tail);
}

EPWord digits_symmetric(const BigRational& x, int q) {
    if (q < 2) throw std::invalid_argument("digits_symmetric requires q >= 2");
    BigRational half(1, 2);
    if (x < -half || x >= half) throw std::invalid_argument("x out of range");
    const int digit_bound = q / 2;
    std::map<BigRational, std::size_t> seen;
    std::vector<Letter> digits;
    BigRational y = x;
    for (;;) {
        auto it = seen.find(y);
        if (it != seen.end()) {
            std::size_t start = it->second;
            FiniteWord pre(symmetric_alphabet(q),
                           std::vector<Letter>(digits.begin(),
                                               digits.begin() + start));
            FiniteWord per(symmetric_alphabet(q),
                           std::vector<Letter>(digits.begin() + start,
                                               digits.end()));
            return EPWord(pre, per);
        }
        seen.emplace(y, digits.size());
        BigInt a = rational_floor(q * y + half);
        if (a < -digit_bound || a > digit_bound)
            throw std::logic_error("digit outside symmetric alphabet");
        int d = static_cast<int>(a);
        digits.push_back(d);
        y = q * y - d;
    }
}

BigRational lagrange_value(const BigRational& x, int q) {
    if (q < 2) throw std::invalid_argument("lagrange_value requires q >= 2");
    BigRational half(1, 2);
    BigRational r = x - rational_floor(x + half);  // into [-1/2, 1/2)
    EPWord d = digits_symmetric(r, q);
    const FiniteWord& v = d.period();
    BigRational best = 0;
    std::vector<Letter> rot(v.letters());
    for (std::size_t s = 0; s < v.size(); ++s) {
        EPWord tail = EPWord::pure(FiniteWord(v.alphabet(), rot));
        BigRational val = pi_exact(tail, q);
        if (val < 0) val = -val;
        if (val > best) best = val;
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
    return best;
}

std::vector<BigRational> lagrange_discrete(int q, std::size_t count) {
    if (q < 2) throw std::invalid_argument("lagrange_discrete requires q >= 2");
    std::vector<BigRational> out;
    out.reserve(count);
    if (count == 0) return out;
    out.push_back(0);
    Substitution tau = Substitution::tau(0, 2);
    FiniteWord w(kBinary, {0});
    for (std::size_t n = 0; n + 1 < count; ++n) {
        EPWord image = sigma_apply(SigmaMap::rho2, EPWord::pure(w));
        out.push_back(pi_exact(image, q));
        w = tau.apply(w);
    }
    return out;
}

RealInterval mtilde(int q, int precision_bits) {
    if (q < 2) throw std::invalid_argument("mtilde requires q >= 2");
    if (precision_bits < 1) throw std::invalid_argument("precision_bits must be positive");
    BigRational target = 1 / rat_pow(BigRational(2), precision_bits);
    std::vector<std::pair<int, int>> pairs;
    // Track |sigma_[1,n](1)| and |sigma_[1,n](0)| so limit_prefix always has
    // enough levels without materialising the full expansion.
    std::size_t len1 = 1, len0 = 1;
    SignedTransducer rho2 = SignedTransducer::rho(2);
    for (std::size_t len = 64;; len *= 2) {
        while (len1 < len) {
            std::size_t next1 = len1 + 2 * len0;
            len0 = len1;
            len1 = next1;
            pairs.emplace_back(0, 2);
        }
        FiniteWord prefix = limit_prefix(pairs, len);
        FiniteWord image = rho2.apply(prefix);
        RealInterval enc = pi_interval(image, RealInterval(BigRational(q)), 1);
        if (enc.width() <= target) return enc;
    }
}

RealInterval beta_from_expansion(const EPWord& a, const BigRational& tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (!kBinary.contains(a.alphabet()))
        throw std::invalid_argument("beta_from_expansion needs a binary word");
    if (!is_member(Order::automaton(builtin_order("lex")), a))
        throw std::invalid_argument("word is not a lexicographic sup-word");
    if (a.period().size() == 1 && a.period()[0] == 0)
        throw std::invalid_argument("word ends in 0^inf");
    BigRational at_two = pi_exact(a, 2);
    if (at_two > 1) throw std::invalid_argument("no root in (1,2]");
    if (at_two == 1) return RealInterval(BigRational(2));
    // pi_beta(a) is strictly decreasing in beta and tends to infinity as
    // beta -> 1+, so shrink lo toward 1 until pi crosses 1 from above.
    BigRational lo;
    bool found = false;
    for (int t = 1; t <= 100000; ++t) {
        lo = 1 + 1 / rat_pow(BigRational(2), t);
        if (pi_exact(a, lo) >= 1) {
            found = true;
            break;
        }
    }
    if (!found) throw std::invalid_argument("no root in (1,2]");
    BigRational hi = 2;
    while (hi - lo > tol) {
        BigRational mid = (lo + hi) / 2;
        if (pi_exact(a, mid) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return RealInterval(lo, hi);
}

RealInterval weighted_value(const EPWord& e, const FiniteWord& prefix,
                            const RealInterval& beta) {
    if (!e.purely_periodic())
        throw std::invalid_argument("weight word must be purely periodic");
    return pi_interval(weight_apply(e, prefix), beta, 1);
}

}  // namespace cyl
