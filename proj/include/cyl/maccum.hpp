#pragma once

#include <cstddef>
#include <vector>

#include "cyl/orders.hpp"
#include "cyl/subst.hpp"
#include "cyl/words.hpp"

namespace cyl {

/// Exact: the expansion provably ends (terminal form reached).
/// Truncated: the level budget ran out with the expansion still open.
/// Inconclusive: an oracle order's search bound was hit, so levels past
/// the returned ones could not be decided either way.
enum class MaccumStatus { exact, truncated, inconclusive };

/// One level of the scan: the two minimal qualifying indices and how far
/// the scan looked before committing to them.
struct LevelRecord {
    int j = 0;
    int k = 0;
    int scanned_up_to = 0;
};

struct MaccumOptions {
    std::size_t levels = 32;
    std::size_t prefix_len = 256;
    int j_max = 64;           // oracle orders only; automata scan exactly
    std::size_t discrete_count = 8;
};

struct MaccumResult {
    SAdicExpansion expansion;
    FiniteWord m_prefix;
    MaccumStatus status = MaccumStatus::truncated;
    std::vector<EPWord> discrete;
    std::vector<LevelRecord> level_log;
};

/// Computes the smallest accumulation point m of the sup-word set from
/// below, as the S-adic pair stream (j_n, k_n): level by level the two
/// minimal j with [1 0^j 1] < [1 0^j 0] are read off and the order is
/// pulled back through tau_{j,k}. Fewer than two such j end the expansion
/// with m = sigma_{[1,h]}(1 0^∞). Requires 0^∞ < 1^∞.
MaccumResult maccum(const Order& order, const MaccumOptions& opt = {});

/// First count elements of the discrete part below m, ascending:
/// (sigma_{[1,n]}(0))^∞ for n = 0,1,..., plus, in the terminal case, the
/// at most one extra word sigma_{[1,h]}((1 0^j)^∞) below m. For open
/// expansions count is limited by the levels computed.
std::vector<EPWord> discrete_part(const SAdicExpansion& expansion, std::size_t count);

/// Prefix of m determined by the expansion. Throws when the recorded
/// levels pin down fewer than len letters.
FiniteWord m_prefix_of(const SAdicExpansion& expansion, std::size_t len);

/// True when word sits strictly below every infinite word extending
/// m_prefix: it must leave the cylinder within the prefix and compare
/// below both boundary extensions.
bool below_m_cylinder(const Order& order, const EPWord& word, const FiniteWord& m_prefix);

}  // namespace cyl
