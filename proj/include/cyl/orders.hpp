#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyl/subst.hpp"
#include "cyl/words.hpp"

namespace cyl {

/// How a state orders the next letter: natural means smaller letters give
/// smaller words ([w·(-1)] < [w0] < [w1] on the ternary alphabet), reversed
/// swaps every inequality.
enum class Orientation { natural, reversed };

enum class Ordering { less, equal, greater };

/// Finite-state presentation of a cylinder order. The machine reads the
/// common prefix of two words and the orientation of the state it lands in
/// orders the first differing letters. One orientation per state makes the
/// induced ternary order consistent by construction.
class DirectionAutomaton {
  public:
    struct State {
        std::array<int, 3> next{0, 0, 0};  // indexed by letter - alphabet.lo
        Orientation orient = Orientation::natural;
    };

    DirectionAutomaton(int alphabet_size, int initial, std::vector<State> states);

    int alphabet_size() const { return alphabet_size_; }
    Alphabet alphabet() const { return alphabet_size_ == 2 ? kBinary : kTernary; }
    int initial() const { return initial_; }
    int state_count() const { return static_cast<int>(states_.size()); }

    int next(int state, Letter a) const;
    int walk(int state, const FiniteWord& w) const;
    Orientation orient(int state) const { return states_[static_cast<std::size_t>(state)].orient; }
    const State& state(int q) const { return states_[static_cast<std::size_t>(q)]; }

  private:
    int alphabet_size_;
    int initial_;
    std::vector<State> states_;
};

using OrderComparator = std::function<Ordering(const EPWord&, const EPWord&)>;

/// Search bounds for orders given only as black-box comparators.
struct OracleBounds {
    int j_max = 64;
};

/// A finitely described cylinder order: either a direction automaton
/// (everything decidable exactly) or a bounded oracle comparator
/// (downstream searches may come back inconclusive).
class Order {
  public:
    static Order automaton(DirectionAutomaton aut);
    static Order oracle(OrderComparator cmp, Alphabet alpha, OracleBounds bounds = {});

    bool is_automaton() const { return aut_.has_value(); }
    const DirectionAutomaton* automaton_ptr() const { return aut_ ? &*aut_ : nullptr; }
    Alphabet alphabet() const { return alpha_; }
    const OracleBounds& bounds() const { return bounds_; }

    /// Total comparison of two eventually periodic words.
    Ordering compare(const EPWord& a, const EPWord& b) const;

    /// [x] < [y] for equal-length cylinders, decided on (x)^∞ vs (y)^∞.
    bool cylinder_less(const FiniteWord& x, const FiniteWord& y) const;

  private:
    Order() = default;
    std::optional<DirectionAutomaton> aut_;
    OrderComparator cmp_;
    Alphabet alpha_{0, 1};
    OracleBounds bounds_;
};

/// Built-in orders by name: lex, alt, uni, flip (binary) and lex3, alt3,
/// bi, biflip (ternary).
DirectionAutomaton builtin_order(const std::string& name);

/// The order a <= b iff e·a <=_lex e·b for a weight word e over {+1,-1}:
/// one state per position of e, oriented by the sign there.
DirectionAutomaton eorder_automaton(const EPWord& e);

/// Samples the defining axiom: whenever a <= b <= c, d(a,b) <= d(a,c).
/// Returns false as soon as one sampled triple violates it.
bool check_cylinder_axiom(const Order& order, std::span<const std::array<EPWord, 3>> triples);

/// The binary order <' with a <' b iff tau_{j,k}(a) <= tau_{j,k}(b).
/// Same state set: the new transition follows the image of the letter, and
/// the orientation flips because after the common image block the word that
/// read 0 continues with 1 and the word that read 1 continues with 0.
DirectionAutomaton pullback_tau(const DirectionAutomaton& aut, int j, int k);

/// The binary order <' with a <' b iff sigma(a) <=_ternary sigma(b), for
/// sigma one of the classified letter maps. Product of the ternary states
/// with the transducer parity for the rho variants.
DirectionAutomaton pullback_rho(const DirectionAutomaton& aut3, SigmaMap which);

/// Constructs a binary automaton whose expansion under the accumulation
/// algorithm reproduces the first `depth` pairs: a trie over the cylinder
/// constraints that pin each level's two minimal qualifying indices,
/// everything else lex. With terminal_h set (which must equal depth) the
/// expansion stops there and the accumulation point is sigma_{[1,h]}(1 0^∞);
/// odd h needs reversed orientations on all states past the deepest
/// constraint, so the completion below that depth switches parity instead
/// of staying lex.
DirectionAutomaton order_from_sadic(std::span<const std::pair<int, int>> pairs,
                                    std::optional<int> terminal_h, std::size_t depth);

}  // namespace cyl
