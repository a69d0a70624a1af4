#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace cyl {

using Letter = int;

/// Inclusive letter range. Words carry one as a tag; operations check
/// compatibility at their boundaries instead of templating on the alphabet.
struct Alphabet {
    int lo = 0;
    int hi = 1;

    constexpr bool contains(Letter a) const { return lo <= a && a <= hi; }
    constexpr bool contains(const Alphabet& inner) const {
        return lo <= inner.lo && inner.hi <= hi;
    }
    constexpr int size() const { return hi - lo + 1; }

    friend constexpr bool operator==(const Alphabet&, const Alphabet&) = default;
};

inline constexpr Alphabet kBinary{0, 1};
inline constexpr Alphabet kTernary{-1, 1};

/// {0, ±1, ..., ±⌊q/2⌋}, the digit range of the symmetric q-expansions.
constexpr Alphabet symmetric_alphabet(int q) { return Alphabet{-(q / 2), q / 2}; }

/// A finite word over a tagged alphabet. Letters are small signed integers
/// so the same type serves binary words, ternary words and digit strings.
class FiniteWord {
  public:
    FiniteWord() = default;
    explicit FiniteWord(Alphabet alpha) : alpha_(alpha) {}
    FiniteWord(Alphabet alpha, std::vector<Letter> letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter back() const { return letters_.back(); }
    const std::vector<Letter>& letters() const { return letters_; }
    Alphabet alphabet() const { return alpha_; }

    std::size_t count(Letter a) const;

    void push_back(Letter a);
    void pop_back() { letters_.pop_back(); }
    FiniteWord& operator+=(const FiniteWord& w);
    friend FiniteWord operator+(FiniteWord a, const FiniteWord& b) {
        a += b;
        return a;
    }

    /// Letters [pos, pos+len), clamped to the end of the word.
    FiniteWord sub(std::size_t pos, std::size_t len) const;
    FiniteWord prefix(std::size_t len) const { return sub(0, len); }
    bool starts_with(const FiniteWord& w) const;

    /// Drops letters beyond len.
    void truncate(std::size_t len);

    /// Same letters under a wider (or equal) alphabet tag.
    FiniteWord retagged(Alphabet alpha) const;

    /// Equality compares letter sequences; the tag is metadata.
    friend bool operator==(const FiniteWord& a, const FiniteWord& b) {
        return a.letters_ == b.letters_;
    }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

  private:
    Alphabet alpha_{0, 1};
    std::vector<Letter> letters_;
};

FiniteWord repeat(const FiniteWord& w, std::size_t times);

/// An eventually periodic infinite word u·v^∞, kept in canonical form:
/// v is primitive and u is the shortest preperiod (the last letter of u
/// never equals the last letter of v). Two EPWords are equal iff their
/// canonical components are equal letter for letter.
class EPWord {
  public:
    /// Canonicalizes on construction. The period must be nonempty.
    EPWord(FiniteWord preperiod, FiniteWord period);

    static EPWord pure(FiniteWord period) { return EPWord(FiniteWord(period.alphabet()), std::move(period)); }
    static EPWord constant(Letter a, Alphabet alpha);

    const FiniteWord& preperiod() const { return pre_; }
    const FiniteWord& period() const { return per_; }
    Alphabet alphabet() const { return pre_.alphabet(); }
    bool purely_periodic() const { return pre_.empty(); }

    /// 0-based letter access: position i of u·v^∞.
    Letter at(std::size_t i) const;

    /// The first len letters as a finite word.
    FiniteWord prefix(std::size_t len) const;

    friend bool operator==(const EPWord& a, const EPWord& b) {
        return a.pre_ == b.pre_ && a.per_ == b.per_;
    }

  private:
    FiniteWord pre_, per_;
};

/// Canonical form of u·v^∞ (same as the EPWord constructor).
EPWord canonicalize(FiniteWord u, FiniteWord v);

/// 1-based index of the first position where a and b differ, or nullopt
/// when they are the same infinite word. The scan is bounded by
/// max(|u_a|,|u_b|) + lcm(|v_a|,|v_b|) positions.
std::optional<std::size_t> first_difference(const EPWord& a, const EPWord& b);

/// Exact value 2^(-n) or zero, the range of the ultrametric
/// d(a,b) = 2^(-min{ n≥1 : a_n ≠ b_n }). No floating point involved.
class UltraDist {
  public:
    static UltraDist zero() { return UltraDist(true, 0); }
    static UltraDist pow2(long long neg_exponent) { return UltraDist(false, neg_exponent); }

    bool is_zero() const { return zero_; }
    /// n such that the value is 2^(-n). Meaningless for zero.
    long long exponent() const { return exp_; }

    /// The value multiplied by 2^(-extra).
    UltraDist scaled_down(long long extra) const {
        return zero_ ? *this : pow2(exp_ + extra);
    }

    friend bool operator==(const UltraDist& a, const UltraDist& b) {
        return a.zero_ == b.zero_ && (a.zero_ || a.exp_ == b.exp_);
    }
    friend bool operator<(const UltraDist& a, const UltraDist& b) {
        if (a.zero_) return !b.zero_;
        if (b.zero_) return false;
        return a.exp_ > b.exp_;
    }
    friend bool operator<=(const UltraDist& a, const UltraDist& b) {
        return a < b || a == b;
    }

  private:
    UltraDist(bool zero, long long exp) : zero_(zero), exp_(exp) {}
    bool zero_;
    long long exp_;
};

UltraDist ultrametric_distance(const EPWord& a, const EPWord& b);

/// a_{n+1} a_{n+2} ... as an EPWord (n letters dropped).
EPWord shift(const EPWord& a, std::size_t n);

/// All distinct tails of a. At most |u|+|v| elements, in order of the
/// first shift that produces each.
std::vector<EPWord> shift_set(const EPWord& a);

}  // namespace cyl
