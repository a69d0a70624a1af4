#include "cyl/supwords.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyl/subst.hpp"

namespace cyl {

namespace {

EPWord compare_max(const Order& order, const std::vector<EPWord>& words) {
    if (words.empty()) throw std::invalid_argument("empty candidate set");
    const EPWord* best = &words[0];
    for (const EPWord& w : words)
        if (order.compare(*best, w) == Ordering::less) best = &w;
    return *best;
}

}  // namespace

EPWord sup_word(const Order& order, const EPWord& a) { return compare_max(order, shift_set(a)); }

EPWord limsup_word(const Order& order, const EPWord& a) {
    return compare_max(order, shift_set(EPWord::pure(a.period())));
}

bool is_member(const Order& order, const EPWord& a) { return sup_word(order, a) == a; }

EPWord abs_word(const EPWord& a) {
    std::size_t span = a.preperiod().size() + a.period().size();
    for (std::size_t i = 0; i < span; ++i) {
        if (a.at(i) > 0) return a;
        if (a.at(i) < 0) return negate_letters(a);
    }
    return a;  // 0^∞
}

EPWord sup_word_abs(const Order& order3, const EPWord& a) {
    if (order3.alphabet() != kTernary)
        throw std::invalid_argument("sup_word_abs needs a ternary order");
    std::vector<EPWord> candidates;
    for (const EPWord& t : shift_set(a)) {
        EPWord u = abs_word(t);
        if (std::find(candidates.begin(), candidates.end(), u) == candidates.end())
            candidates.push_back(u);
    }
    return compare_max(order3, candidates);
}

std::vector<std::size_t> approximant_periods(const EPWord& a, std::size_t max_n) {
    std::vector<std::size_t> out;
    std::vector<UltraDist> scaled;  // 2^{-i} d(a, shift(a,i)) for i = 1..
    for (std::size_t n = 1; n <= max_n; ++n) {
        UltraDist dn = ultrametric_distance(a, shift(a, n)).scaled_down(static_cast<long long>(n));
        bool best = true;
        for (const UltraDist& di : scaled)
            if (!(dn < di)) {
                best = false;
                break;
            }
        if (best) out.push_back(n);
        scaled.push_back(dn);
    }
    return out;
}

std::vector<EPWord> enumerate_members(const Order& order, std::size_t max_period) {
    if (order.alphabet() != kBinary)
        throw std::invalid_argument("enumerate_members is defined for binary orders");
    if (max_period == 0 || max_period > 24) throw std::invalid_argument("max_period out of range");
    std::vector<EPWord> members;
    std::vector<Letter> buf;
    for (std::size_t p = 1; p <= max_period; ++p) {
        buf.assign(p, 0);
        for (std::size_t code = 0; code < (std::size_t{1} << p); ++code) {
            for (std::size_t i = 0; i < p; ++i) buf[i] = (code >> i) & 1 ? 1 : 0;
            // Keep only the least rotation of each primitive necklace.
            bool least = true;
            for (std::size_t r = 1; r < p && least; ++r) {
                for (std::size_t i = 0; i < p; ++i) {
                    Letter x = buf[i], y = buf[(i + r) % p];
                    if (x != y) {
                        least = x < y;
                        break;
                    }
                    if (i + 1 == p) least = false;  // period divides r: not primitive
                }
            }
            if (!least) continue;
            EPWord w = EPWord::pure(FiniteWord(kBinary, buf));
            if (w.period().size() != p) continue;
            members.push_back(sup_word(order, w));
        }
    }
    std::sort(members.begin(), members.end(), [&](const EPWord& x, const EPWord& y) {
        return order.compare(x, y) == Ordering::less;
    });
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

}  // namespace cyl
