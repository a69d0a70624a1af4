#include "cyl/analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cyl/subst.hpp"

namespace cyl {

namespace {

std::set<std::vector<Letter>> factor_set(const FiniteWord& sample, std::size_t n) {
    std::set<std::vector<Letter>> out;
    if (sample.size() < n) return out;
    for (std::size_t i = 0; i + n <= sample.size(); ++i) {
        std::vector<Letter> f(sample.letters().begin() + i,
                              sample.letters().begin() + i + n);
        out.insert(std::move(f));
    }
    return out;
}

}  // namespace

FactorCensus factor_complexity(const FiniteWord& prefix, std::size_t n) {
    if (n == 0) throw std::invalid_argument("factor length must be positive");
    if (prefix.size() < 4 * n) throw std::invalid_argument("prefix too short");
    FactorCensus census;
    census.n = n;
    census.count = factor_set(prefix, n).size();
    std::size_t half = prefix.size() / 2;
    census.stabilized =
        half >= n && factor_set(prefix.prefix(half), n).size() == census.count;
    return census;
}

std::vector<BispecialFactor> bispecial_census(const FiniteWord& prefix,
                                              std::size_t maxlen) {
    if (!kBinary.contains(prefix.alphabet()))
        throw std::invalid_argument("bispecial census is defined for binary samples");
    if (prefix.size() < 4 * (maxlen + 2))
        throw std::invalid_argument("prefix too short");
    if (!factor_complexity(prefix, maxlen + 2).stabilized)
        throw std::invalid_argument("prefix too short: factor counts not stabilized");
    std::vector<BispecialFactor> out;
    for (std::size_t len = 0; len <= maxlen; ++len) {
        auto extended = factor_set(prefix, len + 2);
        auto occurs = [&](Letter a, const std::vector<Letter>& v, Letter b) {
            std::vector<Letter> w;
            w.reserve(v.size() + 2);
            w.push_back(a);
            w.insert(w.end(), v.begin(), v.end());
            w.push_back(b);
            return extended.count(w) != 0;
        };
        for (const auto& v : factor_set(prefix, len)) {
            bool n00 = occurs(0, v, 0), n01 = occurs(0, v, 1);
            bool n10 = occurs(1, v, 0), n11 = occurs(1, v, 1);
            FiniteWord f(prefix.alphabet(), v);
            if (n00 && n01 && n10 && n11)
                out.push_back({std::move(f), BispecialKind::strong});
            else if (n01 && n10 && !n00 && !n11)
                out.push_back({std::move(f), BispecialKind::weak});
        }
    }
    return out;
}

bool check_complexity_bound(const FiniteWord& prefix, std::size_t N) {
    for (std::size_t n = 2; n <= N; ++n) {
        FactorCensus census = factor_complexity(prefix, n);
        if (!census.stabilized)
            throw std::runtime_error("factor counts not stabilized at length " +
                                     std::to_string(n));
        if (census.count > 3 * n - 2) return false;
    }
    return true;
}

WnCheck wn_words(std::span<const std::pair<int, int>> pairs, std::size_t n) {
    if (n > pairs.size()) throw std::invalid_argument("n exceeds pair list");
    WnCheck result{FiniteWord(kBinary), false};
    FiniteWord zero(kBinary, {0});
    for (std::size_t i = n; i >= 1; --i)
        result.wn += compose_tau_chain(pairs, i).apply(zero);
    Substitution chain = compose_tau_chain(pairs, n);
    std::size_t t = std::max<std::size_t>(16, n + 4);
    std::vector<FiniteWord> tails;
    tails.push_back(FiniteWord(kBinary, std::vector<Letter>(t, 0)));
    tails.push_back(FiniteWord(kBinary, std::vector<Letter>(t, 1)));
    FiniteWord alt(kBinary);
    for (std::size_t i = 0; i < t; ++i) alt.push_back(i % 2 == 0 ? 1 : 0);
    tails.push_back(alt);
    result.contained = true;
    for (Letter first : {0, 1}) {
        Letter dictated = (n % 2 == 0) ? first : 1 - first;
        for (const FiniteWord& z : tails) {
            FiniteWord x(kBinary, {first});
            x += z;
            FiniteWord image = chain.apply(x);
            if (image.size() < result.wn.size() + 1)
                throw std::logic_error("test word too short for w_n check");
            FiniteWord expected = result.wn;
            expected.push_back(dictated);
            if (!image.starts_with(expected)) result.contained = false;
        }
    }
    return result;
}

bool conjugacy_check(int k, const FiniteWord& w) {
    if (k < 1) throw std::invalid_argument("conjugacy_check requires k >= 1");
    FiniteWord pad(kBinary, std::vector<Letter>(k - 1, 0));
    FiniteWord lhs = Substitution::theta(k).apply(w) + pad;
    FiniteWord rhs = pad + Substitution::tau(k - 1, k).apply(w);
    return lhs == rhs;
}

FiniteWord fibonacci_prefix(std::size_t L) {
    std::vector<std::pair<int, int>> pairs;
    std::size_t len1 = 1, len0 = 1;
    while (len1 < L) {
        std::size_t next1 = len1 + len0;
        len0 = len1;
        len1 = next1;
        pairs.emplace_back(0, 1);
    }
    return limit_prefix(pairs, L);
}

}  // namespace cyl
