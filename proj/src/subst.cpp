#include "cyl/subst.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace cyl {

Substitution::Substitution(FiniteWord image0, FiniteWord image1)
    : im0_(std::move(image0)), im1_(std::move(image1)) {
    if (im0_.empty() || im1_.empty()) throw std::invalid_argument("empty substitution image");
    if (!(im0_.alphabet() == kBinary) || !(im1_.alphabet() == kBinary))
        throw std::invalid_argument("substitution images must be binary");
}

Substitution Substitution::tau(int j, int k) {
    if (j < 0 || j >= k) throw std::invalid_argument("tau requires 0 <= j < k");
    FiniteWord a(kBinary), b(kBinary);
    a.push_back(1);
    for (int i = 0; i < j; ++i) a.push_back(0);
    b.push_back(1);
    for (int i = 0; i < k; ++i) b.push_back(0);
    return Substitution(std::move(a), std::move(b));
}

Substitution Substitution::theta(int k) {
    if (k < 1) throw std::invalid_argument("theta requires k >= 1");
    FiniteWord a(kBinary), b(kBinary);
    for (int i = 0; i < k - 1; ++i) a.push_back(0);
    a.push_back(1);
    b = a;
    b.push_back(0);
    return Substitution(std::move(a), std::move(b));
}

FiniteWord Substitution::apply(const FiniteWord& w) const {
    FiniteWord out(kBinary);
    for (Letter a : w) out += image(a);
    return out;
}

EPWord Substitution::apply(const EPWord& a) const {
    return EPWord(apply(a.preperiod()), apply(a.period()));
}

Substitution Substitution::after(const Substitution& inner) const {
    return Substitution(apply(inner.image(0)), apply(inner.image(1)));
}

bool Substitution::is_chain_compatible() const {
    if (im0_[0] != 1 || im1_[0] != 1) return false;
    if (im0_.size() >= im1_.size()) return false;
    return im1_.starts_with(im0_);
}

Substitution compose_tau_chain(std::span<const std::pair<int, int>> pairs, std::size_t n) {
    if (n > pairs.size()) throw std::invalid_argument("chain longer than pair list");
    FiniteWord one(kBinary);
    one.push_back(1);
    FiniteWord zero(kBinary);
    zero.push_back(0);
    Substitution acc(zero, one);  // identity
    for (std::size_t i = 0; i < n; ++i)
        acc = acc.after(Substitution::tau(pairs[i].first, pairs[i].second));
    return acc;
}

FiniteWord limit_prefix(std::span<const std::pair<int, int>> pairs, std::size_t target_len) {
    FiniteWord x(kBinary);
    x.push_back(1);
    // Substituting a prefix yields a prefix of the substituted word, so each
    // level can be truncated before the next one is applied.
    for (std::size_t i = pairs.size(); i-- > 0;) {
        x = Substitution::tau(pairs[i].first, pairs[i].second).apply(x);
        x.truncate(target_len);
    }
    if (x.size() < target_len) throw std::invalid_argument("insufficient pairs for requested length");
    x.truncate(target_len);
    return x;
}

SignedTransducer SignedTransducer::rho(int i) {
    switch (i) {
        case 0: return SignedTransducer(ParityToggle::on_zero);
        case 1: return SignedTransducer(ParityToggle::on_one);
        case 2: return SignedTransducer(ParityToggle::always);
    }
    throw std::invalid_argument("rho index must be 0, 1 or 2");
}

bool SignedTransducer::toggles_on(Letter a) const {
    switch (rule_) {
        case ParityToggle::on_zero: return a == 0;
        case ParityToggle::on_one: return a == 1;
        case ParityToggle::always: return true;
    }
    return false;
}

FiniteWord SignedTransducer::output(bool odd, Letter a) const {
    FiniteWord out(kTernary);
    out.push_back(odd ? -1 : 1);
    if (a == 1) out.push_back(0);
    return out;
}

FiniteWord SignedTransducer::apply(const FiniteWord& w, bool odd_start) const {
    FiniteWord out(kTernary);
    bool odd = odd_start;
    for (Letter a : w) {
        out += output(odd, a);
        if (toggles_on(a)) odd = !odd;
    }
    return out;
}

EPWord SignedTransducer::apply(const EPWord& a) const {
    std::size_t toggles_pre = 0, toggles_per = 0;
    for (Letter x : a.preperiod())
        if (toggles_on(x)) ++toggles_pre;
    for (Letter x : a.period())
        if (toggles_on(x)) ++toggles_per;
    bool odd_at_period = toggles_pre % 2 != 0;
    FiniteWord u = apply(a.preperiod(), false);
    FiniteWord v = apply(a.period(), odd_at_period);
    if (toggles_per % 2 != 0) v += apply(a.period(), !odd_at_period);
    return EPWord(std::move(u), std::move(v));
}

FiniteWord sigma_apply(SigmaMap which, const FiniteWord& w) {
    switch (which) {
        case SigmaMap::rho0: return SignedTransducer::rho(0).apply(w);
        case SigmaMap::rho1: return SignedTransducer::rho(1).apply(w);
        case SigmaMap::rho2: return SignedTransducer::rho(2).apply(w);
        case SigmaMap::tau01: return Substitution::tau(0, 1).apply(w).retagged(kTernary);
    }
    throw std::logic_error("bad SigmaMap");
}

EPWord sigma_apply(SigmaMap which, const EPWord& a) {
    if (which == SigmaMap::tau01) {
        EPWord b = Substitution::tau(0, 1).apply(a);
        return EPWord(b.preperiod().retagged(kTernary), b.period().retagged(kTernary));
    }
    switch (which) {
        case SigmaMap::rho0: return SignedTransducer::rho(0).apply(a);
        case SigmaMap::rho1: return SignedTransducer::rho(1).apply(a);
        default: return SignedTransducer::rho(2).apply(a);
    }
}

namespace {

template <typename F>
FiniteWord map_letters(const FiniteWord& w, Alphabet out_alpha, F f) {
    FiniteWord out(out_alpha);
    for (Letter a : w) out.push_back(f(a));
    return out;
}

}  // namespace

FiniteWord flip_letters(const FiniteWord& w) {
    if (!kBinary.contains(w.alphabet())) throw std::invalid_argument("flip_letters needs a binary word");
    return map_letters(w, kBinary, [](Letter a) { return 1 - a; });
}

EPWord flip_letters(const EPWord& a) {
    return EPWord(flip_letters(a.preperiod()), flip_letters(a.period()));
}

FiniteWord letter_abs(const FiniteWord& w) {
    return map_letters(w, Alphabet{0, std::max(std::abs(w.alphabet().lo), std::abs(w.alphabet().hi))},
                       [](Letter a) { return a < 0 ? -a : a; });
}

EPWord letter_abs(const EPWord& a) {
    return EPWord(letter_abs(a.preperiod()), letter_abs(a.period()));
}

FiniteWord negate_letters(const FiniteWord& w) {
    Alphabet alpha{-w.alphabet().hi, -w.alphabet().lo};
    return map_letters(w, alpha, [](Letter a) { return -a; });
}

EPWord negate_letters(const EPWord& a) {
    return EPWord(negate_letters(a.preperiod()), negate_letters(a.period()));
}

namespace {

void require_sign_word(const EPWord& e) {
    for (Letter a : e.preperiod())
        if (a != 1 && a != -1) throw std::invalid_argument("weight word letters must be +-1");
    for (Letter a : e.period())
        if (a != 1 && a != -1) throw std::invalid_argument("weight word letters must be +-1");
}

}  // namespace

FiniteWord weight_apply(const EPWord& e, const FiniteWord& w) {
    require_sign_word(e);
    Alphabet alpha{std::min(w.alphabet().lo, -w.alphabet().hi), std::max(w.alphabet().hi, -w.alphabet().lo)};
    FiniteWord out(alpha);
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(e.at(i) * w[i]);
    return out;
}

EPWord weight_apply(const EPWord& e, const EPWord& a) {
    require_sign_word(e);
    std::size_t pre = std::max(e.preperiod().size(), a.preperiod().size());
    std::size_t per = std::lcm(e.period().size(), a.period().size());
    Alphabet alpha{std::min(a.alphabet().lo, -a.alphabet().hi), std::max(a.alphabet().hi, -a.alphabet().lo)};
    FiniteWord u(alpha), v(alpha);
    for (std::size_t i = 0; i < pre; ++i) u.push_back(e.at(i) * a.at(i));
    for (std::size_t i = pre; i < pre + per; ++i) v.push_back(e.at(i) * a.at(i));
    return EPWord(std::move(u), std::move(v));
}

}  // namespace cyl
