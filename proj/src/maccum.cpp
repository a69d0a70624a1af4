#include "cyl/maccum.hpp"

#include <stdexcept>

namespace cyl {

namespace {

struct ScanOutcome {
    std::vector<int> qualifying;  // at most the two minimal indices
    int scanned = 0;
};

/// Exact scan for the two minimal j with [1 0^j 1] < [1 0^j 0]: those are
/// the j whose state on the 0-path after reading 1 is reversed. The path
/// enters a cycle within state_count() steps, which decides every j at once.
ScanOutcome scan_level(const DirectionAutomaton& aut) {
    std::vector<int> first_at(static_cast<std::size_t>(aut.state_count()), -1);
    std::vector<bool> qual;
    int q = aut.next(aut.initial(), 1);
    int t = 0;
    while (first_at[static_cast<std::size_t>(q)] < 0) {
        first_at[static_cast<std::size_t>(q)] = t;
        qual.push_back(aut.orient(q) == Orientation::reversed);
        q = aut.next(q, 0);
        ++t;
    }
    int s = first_at[static_cast<std::size_t>(q)];  // the cycle is [s, t)
    bool cycle_qualifies = false;
    for (int i = s; i < t; ++i) cycle_qualifies = cycle_qualifies || qual[static_cast<std::size_t>(i)];

    ScanOutcome out;
    out.scanned = t;
    for (int i = 0; i < t && out.qualifying.size() < 2; ++i)
        if (qual[static_cast<std::size_t>(i)]) out.qualifying.push_back(i);
    if (out.qualifying.size() < 2 && cycle_qualifies) {
        for (int i = t; out.qualifying.size() < 2; ++i) {
            if (qual[static_cast<std::size_t>(s + (i - s) % (t - s))]) out.qualifying.push_back(i);
            out.scanned = i;
        }
    }
    return out;
}

ScanOutcome scan_level_oracle(const Order& base, const Substitution& sigma, int j_max) {
    ScanOutcome out;
    for (int j = 0; j <= j_max && out.qualifying.size() < 2; ++j) {
        FiniteWord hi(kBinary), lo(kBinary);
        hi.push_back(1);
        for (int i = 0; i < j; ++i) hi.push_back(0);
        lo = hi;
        hi.push_back(1);
        lo.push_back(0);
        EPWord a = sigma.apply(EPWord::pure(hi));
        EPWord b = sigma.apply(EPWord::pure(lo));
        if (base.compare(a, b) == Ordering::less) out.qualifying.push_back(j);
        out.scanned = j;
    }
    return out;
}

/// sigma_{[1,n]}(seed) truncated to len at every level, so prefixes of the
/// limit word never materialize the full images.
FiniteWord chain_prefix(std::span<const std::pair<int, int>> pairs, FiniteWord seed, std::size_t len) {
    FiniteWord x = std::move(seed);
    x.truncate(len);
    for (std::size_t i = pairs.size(); i-- > 0;) {
        x = Substitution::tau(pairs[i].first, pairs[i].second).apply(x);
        x.truncate(len);
    }
    return x;
}

constexpr std::size_t kImageCap = std::size_t{1} << 22;

}  // namespace

MaccumResult maccum(const Order& order, const MaccumOptions& opt) {
    if (order.alphabet() != kBinary) throw std::invalid_argument("maccum needs a binary order");
    EPWord zero = EPWord::constant(0, kBinary);
    EPWord one = EPWord::constant(1, kBinary);
    if (order.compare(zero, one) != Ordering::less)
        throw std::invalid_argument("order places 1^inf below 0^inf; flip letters and retry");

    MaccumResult res;
    res.status = MaccumStatus::truncated;

    const bool is_oracle = !order.is_automaton();
    std::optional<DirectionAutomaton> cur;
    if (!is_oracle) cur = *order.automaton_ptr();
    FiniteWord id0(kBinary), id1(kBinary);
    id0.push_back(0);
    id1.push_back(1);
    Substitution sigma(id0, id1);  // identity, tracks the oracle pullback

    for (std::size_t level = 0; level < opt.levels; ++level) {
        ScanOutcome sc = is_oracle ? scan_level_oracle(order, sigma, opt.j_max) : scan_level(*cur);
        if (sc.qualifying.size() >= 2) {
            int j = sc.qualifying[0], k = sc.qualifying[1];
            res.expansion.pairs.emplace_back(j, k);
            res.level_log.push_back(LevelRecord{j, k, sc.scanned});
            if (is_oracle) {
                sigma = sigma.after(Substitution::tau(j, k));
                if (sigma.image(1).size() > kImageCap) {
                    res.status = MaccumStatus::inconclusive;
                    break;
                }
            } else {
                cur = pullback_tau(*cur, j, k);
            }
        } else if (is_oracle) {
            // Within j_max fewer than two indices qualified; a larger k may
            // exist past the bound, so neither a pair nor the terminal form
            // can be claimed.
            res.status = MaccumStatus::inconclusive;
            break;
        } else {
            res.expansion.terminal = true;
            if (sc.qualifying.size() == 1) res.expansion.terminal_extra_j = sc.qualifying[0];
            res.status = MaccumStatus::exact;
            break;
        }
    }

    if (res.expansion.terminal) {
        FiniteWord seed(kBinary);
        seed.push_back(1);
        for (std::size_t i = 0; i < opt.prefix_len; ++i) seed.push_back(0);
        res.m_prefix = chain_prefix(res.expansion.pairs, std::move(seed), opt.prefix_len);
    } else {
        // The accumulation point lies in sigma_{[1,n]}([1]) at every level,
        // so sigma_{[1,n]}(1) is a determined prefix even when truncated.
        FiniteWord seed(kBinary);
        seed.push_back(1);
        res.m_prefix = chain_prefix(res.expansion.pairs, std::move(seed), opt.prefix_len);
    }

    std::size_t available = res.expansion.depth() + 1;
    if (res.expansion.terminal && res.expansion.terminal_extra_j) ++available;
    res.discrete = discrete_part(res.expansion, std::min(opt.discrete_count, available));
    return res;
}

std::vector<EPWord> discrete_part(const SAdicExpansion& expansion, std::size_t count) {
    std::size_t base_available = expansion.depth() + 1;
    std::size_t available = base_available + (expansion.terminal && expansion.terminal_extra_j ? 1 : 0);
    if (count > available) {
        if (!expansion.terminal)
            throw std::invalid_argument("insufficient levels for requested count");
        count = available;  // the terminal set below m is complete
    }
    std::vector<EPWord> out;
    FiniteWord img0(kBinary), img1(kBinary);
    img0.push_back(0);
    img1.push_back(1);
    std::size_t base_count = std::min(count, base_available);
    for (std::size_t n = 0; n < base_count; ++n) {
        out.push_back(EPWord::pure(img0));
        if (n + 1 < base_count) {
            auto [j, k] = expansion.pairs[n];
            FiniteWord n0 = img1;
            for (int r = 0; r < j; ++r) n0 += img0;
            FiniteWord n1 = img1;
            for (int r = 0; r < k; ++r) n1 += img0;
            if (n0.size() > (std::size_t{1} << 22)) throw std::runtime_error("discrete element too large");
            img0 = std::move(n0);
            img1 = std::move(n1);
        }
    }
    if (count > base_count && expansion.terminal_extra_j) {
        // img0/img1 now hold the images of sigma_{[1,h]}.
        FiniteWord v = img1;
        for (int r = 0; r < *expansion.terminal_extra_j; ++r) v += img0;
        out.push_back(EPWord::pure(v));
    }
    return out;
}

FiniteWord m_prefix_of(const SAdicExpansion& expansion, std::size_t len) {
    if (expansion.terminal) {
        FiniteWord seed(kBinary);
        seed.push_back(1);
        for (std::size_t i = 0; i < len; ++i) seed.push_back(0);
        return chain_prefix(expansion.pairs, std::move(seed), len);
    }
    return limit_prefix(expansion.pairs, len);
}

bool below_m_cylinder(const Order& order, const EPWord& word, const FiniteWord& m_prefix) {
    if (m_prefix.empty()) throw std::invalid_argument("empty prefix");
    EPWord ext0(m_prefix, FiniteWord(m_prefix.alphabet(), {0}));
    EPWord ext1(m_prefix, FiniteWord(m_prefix.alphabet(), {1}));
    auto fd = first_difference(word, ext0);
    if (!fd || *fd > m_prefix.size()) return false;  // word does not leave the cylinder
    return order.compare(word, ext0) == Ordering::less && order.compare(word, ext1) == Ordering::less;
}

}  // namespace cyl
