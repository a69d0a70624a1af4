#include "cyl/symabs.hpp"

#include <stdexcept>

namespace cyl {

SigmaMap classify(const Order& order3) {
    if (order3.alphabet() != kTernary) throw std::invalid_argument("classify needs a ternary order");
    EPWord zero = EPWord::constant(0, kTernary);
    EPWord one = EPWord::constant(1, kTernary);
    if (order3.compare(zero, one) != Ordering::less)
        throw std::invalid_argument("order places 1^inf below 0^inf; negate letters and retry");
    FiniteWord a(kTernary, {1, -1}), b(kTernary, {1, 0});
    bool natural_at_1 = order3.cylinder_less(a, b);
    FiniteWord c(kTernary, {1, 0, -1}), d(kTernary, {1, 0, 0});
    bool natural_at_10 = order3.cylinder_less(c, d);
    if (natural_at_1) return natural_at_10 ? SigmaMap::rho2 : SigmaMap::rho0;
    return natural_at_10 ? SigmaMap::rho1 : SigmaMap::tau01;
}

namespace {

Order induced_binary_order(const Order& order3, SigmaMap which) {
    if (const DirectionAutomaton* aut = order3.automaton_ptr())
        return Order::automaton(pullback_rho(*aut, which));
    return Order::oracle(
        [order3, which](const EPWord& a, const EPWord& b) {
            return order3.compare(sigma_apply(which, a), sigma_apply(which, b));
        },
        kBinary, order3.bounds());
}

}  // namespace

SymResult m_abs(const Order& order3, const MaccumOptions& opt) {
    SymResult res;
    res.map = classify(order3);
    // Each output block of the map consumes one input letter and writes at
    // least one, so prefix_len input letters determine prefix_len outputs.
    res.inner = maccum(induced_binary_order(order3, res.map), opt);
    FiniteWord image = sigma_apply(res.map, res.inner.m_prefix);
    image.truncate(opt.prefix_len);
    res.m_abs_prefix = image;
    return res;
}

std::vector<EPWord> discrete_abs(const SymResult& result, std::size_t count) {
    std::vector<EPWord> out;
    if (count == 0) return out;
    out.push_back(EPWord::constant(0, kTernary));
    std::vector<EPWord> inner = discrete_part(result.inner.expansion, count > 0 ? count - 1 : 0);
    for (const EPWord& w : inner) out.push_back(sigma_apply(result.map, w));
    return out;
}

}  // namespace cyl
