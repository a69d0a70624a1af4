#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cyl/words.hpp"

namespace cyl {

/// A binary substitution given by the images of 0 and 1. The family used
/// throughout keeps image(0) a proper prefix of image(1) with both images
/// starting in 1; is_chain_compatible() reports whether an instance
/// satisfies that shape (compositions of tau do, arbitrary ones need not).
class Substitution {
  public:
    Substitution(FiniteWord image0, FiniteWord image1);

    /// tau_{j,k}: 0 -> 1 0^j, 1 -> 1 0^k, defined for 0 <= j < k.
    static Substitution tau(int j, int k);
    /// theta_k: 0 -> 0^{k-1} 1, 1 -> 0^{k-1} 1 0, defined for k >= 2.
    static Substitution theta(int k);

    const FiniteWord& image(Letter a) const { return a == 0 ? im0_ : im1_; }

    FiniteWord apply(const FiniteWord& w) const;
    /// Image of u·v^∞, recanonicalized: image(u)·image(v)^∞.
    EPWord apply(const EPWord& a) const;

    /// Composition this ∘ inner: letters go through inner first.
    Substitution after(const Substitution& inner) const;

    bool is_chain_compatible() const;

  private:
    FiniteWord im0_, im1_;
};

/// sigma_{[1,n]} = tau_{p_1} ∘ ... ∘ tau_{p_n} for the first n pairs.
Substitution compose_tau_chain(std::span<const std::pair<int, int>> pairs, std::size_t n);

/// First target_len letters of the one-sided limit word
/// lim_n sigma_{[1,n]}(1^∞), computed bottom-up with truncation so image
/// growth never materializes. Throws when the supplied pairs are too few
/// to pin down target_len letters.
FiniteWord limit_prefix(std::span<const std::pair<int, int>> pairs, std::size_t target_len);

/// Which letter toggles the sign state of a signed transducer.
enum class ParityToggle { on_zero, on_one, always };

/// The binary-to-ternary sign transducers. In the even state the machine
/// writes 1 for input 0 and 1 0 for input 1; in the odd state it writes the
/// negated first letter. The state flips according to the toggle rule.
class SignedTransducer {
  public:
    explicit SignedTransducer(ParityToggle rule) : rule_(rule) {}

    /// rho_i for i in {0,1,2}: toggle on input 0, on input 1, on every input.
    static SignedTransducer rho(int i);

    ParityToggle rule() const { return rule_; }
    bool toggles_on(Letter a) const;

    /// Output block for one input letter read in the given parity state.
    FiniteWord output(bool odd, Letter a) const;

    FiniteWord apply(const FiniteWord& w, bool odd_start = false) const;

    /// Image of an EPWord. When the parity state does not return to its
    /// pre-period value after one pass over v, the output period is the
    /// image of v·v (the state closes after two passes).
    EPWord apply(const EPWord& a) const;

  private:
    ParityToggle rule_;
};

/// The four letter-to-word maps a ternary order classifies to.
enum class SigmaMap { rho0, rho1, rho2, tau01 };

/// Image of a under the classified map: a transducer image for the rho
/// variants, the substitution image under tau_{0,1} (retagged ternary)
/// otherwise.
FiniteWord sigma_apply(SigmaMap which, const FiniteWord& w);
EPWord sigma_apply(SigmaMap which, const EPWord& a);

/// Letterwise 0 <-> 1 on binary words.
FiniteWord flip_letters(const FiniteWord& w);
EPWord flip_letters(const EPWord& a);

/// Letterwise absolute value (ternary -> binary).
FiniteWord letter_abs(const FiniteWord& w);
EPWord letter_abs(const EPWord& a);

FiniteWord negate_letters(const FiniteWord& w);
EPWord negate_letters(const EPWord& a);

/// Letterwise product e_i * a_i for a weight word e over {+1,-1}.
FiniteWord weight_apply(const EPWord& e, const FiniteWord& w);
EPWord weight_apply(const EPWord& e, const EPWord& a);

/// An S-adic expansion: the pair stream (j_n, k_n), plus a terminal marker
/// when the stream provably ends after pairs.size() steps, in which case
/// the limit word is sigma_{[1,h]}(1 0^∞) and at most one extra index j
/// contributes a discrete element sigma_{[1,h]}((1 0^j)^∞).
struct SAdicExpansion {
    std::vector<std::pair<int, int>> pairs;
    bool terminal = false;
    std::optional<int> terminal_extra_j;

    std::size_t depth() const { return pairs.size(); }
};

}  // namespace cyl
