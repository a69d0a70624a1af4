#pragma once

#include <vector>

#include "cyl/maccum.hpp"
#include "cyl/orders.hpp"
#include "cyl/subst.hpp"
#include "cyl/words.hpp"

namespace cyl {

/// Reads the two cylinder comparisons [1 -1] vs [1 0] and [1 0 -1] vs
/// [1 0 0] off a consistent ternary order with 0^∞ < 1^∞ and returns which
/// letter map carries the binary sup-word analysis onto it:
/// (natural, natural) -> rho2,  (natural, reversed) -> rho0,
/// (reversed, natural) -> rho1, (reversed, reversed) -> tau01.
SigmaMap classify(const Order& order3);

struct SymResult {
    SigmaMap map = SigmaMap::rho2;
    MaccumResult inner;       // accumulation data of the induced binary order
    FiniteWord m_abs_prefix;  // ternary prefix, the image of the inner prefix
};

/// Smallest accumulation point of the symmetrized sup-word set: classify,
/// pull the ternary order back to the induced binary order, run the
/// accumulation algorithm there, and push its word through the map.
SymResult m_abs(const Order& order3, const MaccumOptions& opt = {});

/// First count elements below m_abs, ascending: ternary 0^∞ followed by
/// the images of the inner discrete part.
std::vector<EPWord> discrete_abs(const SymResult& result, std::size_t count);

}  // namespace cyl
