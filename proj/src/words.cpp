#include "cyl/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyl {

FiniteWord::FiniteWord(Alphabet alpha, std::vector<Letter> letters)
    : alpha_(alpha), letters_(std::move(letters)) {
    for (Letter a : letters_)
        if (!alpha_.contains(a)) throw std::invalid_argument("letter outside alphabet");
}

std::size_t FiniteWord::count(Letter a) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), a));
}

void FiniteWord::push_back(Letter a) {
    if (!alpha_.contains(a)) throw std::invalid_argument("letter outside alphabet");
    letters_.push_back(a);
}

FiniteWord& FiniteWord::operator+=(const FiniteWord& w) {
    if (!alpha_.contains(w.alpha_) && !w.empty()) {
        for (Letter a : w.letters_)
            if (!alpha_.contains(a)) throw std::invalid_argument("letter outside alphabet");
    }
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
    return *this;
}

FiniteWord FiniteWord::sub(std::size_t pos, std::size_t len) const {
    FiniteWord out(alpha_);
    if (pos >= letters_.size()) return out;
    std::size_t stop = std::min(letters_.size(), pos + len);
    out.letters_.assign(letters_.begin() + pos, letters_.begin() + stop);
    return out;
}

bool FiniteWord::starts_with(const FiniteWord& w) const {
    if (w.size() > size()) return false;
    return std::equal(w.letters_.begin(), w.letters_.end(), letters_.begin());
}

void FiniteWord::truncate(std::size_t len) {
    if (letters_.size() > len) letters_.resize(len);
}

FiniteWord FiniteWord::retagged(Alphabet alpha) const {
    if (!alpha.contains(alpha_)) {
        for (Letter a : letters_)
            if (!alpha.contains(a)) throw std::invalid_argument("letter outside alphabet");
    }
    FiniteWord out(alpha);
    out.letters_ = letters_;
    return out;
}

FiniteWord repeat(const FiniteWord& w, std::size_t times) {
    FiniteWord out(w.alphabet());
    for (std::size_t i = 0; i < times; ++i) out += w;
    return out;
}

namespace {

/// Shortest w with v = w^k. Classic divisor scan; periods stay small here.
FiniteWord primitive_root(const FiniteWord& v) {
    std::size_t n = v.size();
    for (std::size_t d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = v[i] == v[i - d];
        if (ok) return v.sub(0, d);
    }
    return v;
}

}  // namespace

EPWord::EPWord(FiniteWord preperiod, FiniteWord period) : pre_(std::move(preperiod)), per_(std::move(period)) {
    if (per_.empty()) throw std::invalid_argument("empty period");
    if (pre_.alphabet() != per_.alphabet()) {
        Alphabet wide{std::min(pre_.alphabet().lo, per_.alphabet().lo),
                      std::max(pre_.alphabet().hi, per_.alphabet().hi)};
        pre_ = pre_.retagged(wide);
        per_ = per_.retagged(wide);
    }
    per_ = primitive_root(per_);
    // u·v^∞ = u'·v'^∞ with u one letter shorter whenever the dropped letter
    // matches the letter the rotated period would supply in its place.
    while (!pre_.empty() && pre_.back() == per_.back()) {
        Letter last = per_.back();
        FiniteWord rotated(per_.alphabet());
        rotated.push_back(last);
        rotated += per_.sub(0, per_.size() - 1);
        per_ = rotated;
        pre_.pop_back();
    }
}

EPWord EPWord::constant(Letter a, Alphabet alpha) {
    FiniteWord v(alpha);
    v.push_back(a);
    return EPWord::pure(v);
}

Letter EPWord::at(std::size_t i) const {
    if (i < pre_.size()) return pre_[i];
    return per_[(i - pre_.size()) % per_.size()];
}

FiniteWord EPWord::prefix(std::size_t len) const {
    FiniteWord out(alphabet());
    for (std::size_t i = 0; i < len; ++i) out.push_back(at(i));
    return out;
}

EPWord canonicalize(FiniteWord u, FiniteWord v) { return EPWord(std::move(u), std::move(v)); }

std::optional<std::size_t> first_difference(const EPWord& a, const EPWord& b) {
    if (a == b) return std::nullopt;
    std::size_t bound = std::max(a.preperiod().size(), b.preperiod().size()) +
                        std::lcm(a.period().size(), b.period().size());
    for (std::size_t i = 0; i < bound; ++i)
        if (a.at(i) != b.at(i)) return i + 1;
    // Canonical forms differ, so the words do; the scan cannot fall through.
    throw std::logic_error("first_difference scan bound violated");
}

UltraDist ultrametric_distance(const EPWord& a, const EPWord& b) {
    auto n = first_difference(a, b);
    if (!n) return UltraDist::zero();
    return UltraDist::pow2(static_cast<long long>(*n));
}

EPWord shift(const EPWord& a, std::size_t n) {
    const std::size_t pre = a.preperiod().size();
    if (n <= pre) return EPWord(a.preperiod().sub(n, pre - n), a.period());
    std::size_t r = (n - pre) % a.period().size();
    FiniteWord v = a.period().sub(r, a.period().size() - r) + a.period().sub(0, r);
    return EPWord::pure(v);
}

std::vector<EPWord> shift_set(const EPWord& a) {
    std::vector<EPWord> out;
    std::size_t bound = a.preperiod().size() + a.period().size();
    for (std::size_t n = 0; n < bound; ++n) {
        EPWord t = shift(a, n);
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    return out;
}

}  // namespace cyl
