#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cyl/words.hpp"

namespace cyl {

struct FactorCensus {
    std::size_t n = 0;
    std::size_t count = 0;
    // True when the half-length prefix already yields the same count, i.e.
    // lengthening the sample did not reveal new factors.
    bool stabilized = false;
};

// Number of distinct length-n factors of the sample prefix.  Requires
// |prefix| >= 4n so the stabilization cross-check has room to work with.
FactorCensus factor_complexity(const FiniteWord& prefix, std::size_t n);

enum class BispecialKind { strong, weak };

struct BispecialFactor {
    FiniteWord factor;
    BispecialKind kind;
};

// Bispecial factors of a binary sample up to length maxlen.  A factor v is
// strong when all of 0v0, 0v1, 1v0, 1v1 occur, weak when exactly 0v1 and 1v0
// do.  The empty factor is admitted (its extensions are the length-2 factors).
// Requires the factor counts to be stabilized at length maxlen + 2.
std::vector<BispecialFactor> bispecial_census(const FiniteWord& prefix,
                                              std::size_t maxlen);

// True iff p(n) <= 3n - 2 for all 2 <= n <= N on the sample prefix.  Throws
// if any count in that range fails the stabilization cross-check.
bool check_complexity_bound(const FiniteWord& prefix, std::size_t N);

struct WnCheck {
    FiniteWord wn;
    bool contained = false;
};

// The boundary word w_n = sigma_[1,n](0) sigma_[1,n-1](0) ... sigma_[1,1](0)
// of a tau chain, together with a check that images of 0-started (1-started)
// test words begin with w_n followed by the parity-dictated letter.
WnCheck wn_words(std::span<const std::pair<int, int>> pairs, std::size_t n);

// Verifies theta_k(w) 0^{k-1} = 0^{k-1} tau_{k-1,k}(w) for this w.
bool conjugacy_check(int k, const FiniteWord& w);

// Prefix of the Fibonacci word, the limit of the constant (0,1) tau chain.
FiniteWord fibonacci_prefix(std::size_t L);

}  // namespace cyl
