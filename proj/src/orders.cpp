#include "cyl/orders.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cyl {

DirectionAutomaton::DirectionAutomaton(int alphabet_size, int initial, std::vector<State> states)
    : alphabet_size_(alphabet_size), initial_(initial), states_(std::move(states)) {
    if (alphabet_size_ != 2 && alphabet_size_ != 3)
        throw std::invalid_argument("alphabet size must be 2 or 3");
    if (states_.empty()) throw std::invalid_argument("automaton needs at least one state");
    int n = state_count();
    if (initial_ < 0 || initial_ >= n) throw std::invalid_argument("initial state out of range");
    for (const State& s : states_)
        for (int a = 0; a < alphabet_size_; ++a)
            if (s.next[static_cast<std::size_t>(a)] < 0 || s.next[static_cast<std::size_t>(a)] >= n)
                throw std::invalid_argument("transition target out of range");
}

int DirectionAutomaton::next(int state, Letter a) const {
    int idx = a - alphabet().lo;
    if (idx < 0 || idx >= alphabet_size_) throw std::invalid_argument("letter outside order alphabet");
    return states_[static_cast<std::size_t>(state)].next[static_cast<std::size_t>(idx)];
}

int DirectionAutomaton::walk(int state, const FiniteWord& w) const {
    for (Letter a : w) state = next(state, a);
    return state;
}

Order Order::automaton(DirectionAutomaton aut) {
    Order o;
    o.alpha_ = aut.alphabet();
    o.aut_ = std::move(aut);
    return o;
}

Order Order::oracle(OrderComparator cmp, Alphabet alpha, OracleBounds bounds) {
    if (!cmp) throw std::invalid_argument("null comparator");
    Order o;
    o.cmp_ = std::move(cmp);
    o.alpha_ = alpha;
    o.bounds_ = bounds;
    return o;
}

Ordering Order::compare(const EPWord& a, const EPWord& b) const {
    if (!alpha_.contains(a.alphabet()) || !alpha_.contains(b.alphabet()))
        throw std::invalid_argument("word alphabet does not match order alphabet");
    auto n = first_difference(a, b);
    if (!n) return Ordering::equal;
    if (!aut_) return cmp_(a, b);
    int q = aut_->initial();
    for (std::size_t i = 0; i + 1 < *n; ++i) q = aut_->next(q, a.at(i));
    Letter x = a.at(*n - 1), y = b.at(*n - 1);
    bool natural = aut_->orient(q) == Orientation::natural;
    return (x < y) == natural ? Ordering::less : Ordering::greater;
}

bool Order::cylinder_less(const FiniteWord& x, const FiniteWord& y) const {
    if (x.size() != y.size()) throw std::invalid_argument("cylinder comparison needs equal lengths");
    if (x.empty()) throw std::invalid_argument("empty cylinder");
    if (x == y) throw std::invalid_argument("identical cylinders");
    return compare(EPWord::pure(x), EPWord::pure(y)) == Ordering::less;
}

namespace {

DirectionAutomaton two_state_toggle(int alphabet_size, std::vector<Letter> toggling) {
    Alphabet alpha = alphabet_size == 2 ? kBinary : kTernary;
    DirectionAutomaton::State even, odd;
    even.orient = Orientation::natural;
    odd.orient = Orientation::reversed;
    for (int a = alpha.lo; a <= alpha.hi; ++a) {
        bool t = std::find(toggling.begin(), toggling.end(), a) != toggling.end();
        even.next[static_cast<std::size_t>(a - alpha.lo)] = t ? 1 : 0;
        odd.next[static_cast<std::size_t>(a - alpha.lo)] = t ? 0 : 1;
    }
    return DirectionAutomaton(alphabet_size, 0, {even, odd});
}

}  // namespace

DirectionAutomaton builtin_order(const std::string& name) {
    if (name == "lex") {
        DirectionAutomaton::State s;
        return DirectionAutomaton(2, 0, {s});
    }
    if (name == "alt") return two_state_toggle(2, {0, 1});
    if (name == "uni") return two_state_toggle(2, {1});
    if (name == "flip") return two_state_toggle(2, {0});
    if (name == "lex3") {
        DirectionAutomaton::State s;
        return DirectionAutomaton(3, 0, {s});
    }
    if (name == "alt3") return two_state_toggle(3, {-1, 0, 1});
    if (name == "bi") return two_state_toggle(3, {-1, 1});
    if (name == "biflip") return two_state_toggle(3, {0});
    throw std::invalid_argument("unknown builtin order: " + name);
}

DirectionAutomaton eorder_automaton(const EPWord& e) {
    for (std::size_t i = 0; i < e.preperiod().size() + e.period().size(); ++i)
        if (e.at(i) != 1 && e.at(i) != -1)
            throw std::invalid_argument("eorder weight letters must be +-1");
    int pre = static_cast<int>(e.preperiod().size());
    int total = pre + static_cast<int>(e.period().size());
    std::vector<DirectionAutomaton::State> states(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) {
        int succ = i + 1 < total ? i + 1 : pre;
        DirectionAutomaton::State& s = states[static_cast<std::size_t>(i)];
        s.next = {succ, succ, succ};
        s.orient = e.at(static_cast<std::size_t>(i)) > 0 ? Orientation::natural : Orientation::reversed;
    }
    return DirectionAutomaton(3, 0, std::move(states));
}

bool check_cylinder_axiom(const Order& order, std::span<const std::array<EPWord, 3>> triples) {
    for (const auto& t : triples) {
        std::array<const EPWord*, 3> s{&t[0], &t[1], &t[2]};
        std::sort(s.begin(), s.end(), [&](const EPWord* a, const EPWord* b) {
            return order.compare(*a, *b) == Ordering::less;
        });
        UltraDist dab = ultrametric_distance(*s[0], *s[1]);
        UltraDist dac = ultrametric_distance(*s[0], *s[2]);
        if (!(dab <= dac)) return false;
    }
    return true;
}

DirectionAutomaton pullback_tau(const DirectionAutomaton& aut, int j, int k) {
    if (aut.alphabet_size() != 2) throw std::invalid_argument("pullback_tau needs a binary automaton");
    Substitution tau = Substitution::tau(j, k);
    int n = aut.state_count();
    std::vector<DirectionAutomaton::State> states(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        DirectionAutomaton::State& s = states[static_cast<std::size_t>(q)];
        int q0 = aut.walk(q, tau.image(0));
        s.next[0] = q0;
        s.next[1] = aut.walk(q, tau.image(1));
        s.orient = aut.orient(q0) == Orientation::natural ? Orientation::reversed : Orientation::natural;
    }
    return DirectionAutomaton(2, aut.initial(), std::move(states));
}

DirectionAutomaton pullback_rho(const DirectionAutomaton& aut3, SigmaMap which) {
    if (aut3.alphabet_size() != 3) throw std::invalid_argument("pullback_rho needs a ternary automaton");
    if (which == SigmaMap::tau01) {
        // The image alphabet stays {0,1}; after a common image block the word
        // that read 0 continues with 1 and the other with 0, as for tau.
        int n = aut3.state_count();
        std::vector<DirectionAutomaton::State> states(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            DirectionAutomaton::State& s = states[static_cast<std::size_t>(q)];
            int q0 = aut3.next(q, 1);
            s.next[0] = q0;
            s.next[1] = aut3.next(aut3.next(q, 1), 0);
            s.orient = aut3.orient(q0) == Orientation::natural ? Orientation::reversed
                                                               : Orientation::natural;
        }
        return DirectionAutomaton(2, aut3.initial(), std::move(states));
    }
    SignedTransducer t = SignedTransducer::rho(which == SigmaMap::rho0 ? 0
                                               : which == SigmaMap::rho1 ? 1
                                                                         : 2);
    // Product states (ternary state, parity), parity = 1 when the sign state
    // is odd. Both images share the block's first letter; the word that read
    // 0 continues with the sign of the next block while the word that read 1
    // continues with the 0 from its own block.
    int n3 = aut3.state_count();
    auto id = [](int q3, int p) { return q3 * 2 + p; };
    std::vector<DirectionAutomaton::State> states(static_cast<std::size_t>(n3) * 2);
    for (int q3 = 0; q3 < n3; ++q3) {
        for (int p = 0; p < 2; ++p) {
            DirectionAutomaton::State& s = states[static_cast<std::size_t>(id(q3, p))];
            for (Letter a = 0; a <= 1; ++a) {
                int q3n = aut3.walk(q3, t.output(p == 1, a));
                int pn = t.toggles_on(a) ? 1 - p : p;
                s.next[static_cast<std::size_t>(a)] = id(q3n, pn);
            }
            Letter s0 = p == 0 ? 1 : -1;
            Orientation o3 = aut3.orient(aut3.next(q3, s0));
            int p_after_zero = t.toggles_on(0) ? 1 - p : p;
            bool next_block_positive = p_after_zero == 0;
            bool natural = next_block_positive == (o3 == Orientation::reversed);
            s.orient = natural ? Orientation::natural : Orientation::reversed;
        }
    }
    return DirectionAutomaton(2, id(aut3.initial(), 0), std::move(states));
}

namespace {

struct TrieNode {
    int child[2] = {-1, -1};
    int depth = 0;
    std::optional<Orientation> orient;
};

}  // namespace

DirectionAutomaton order_from_sadic(std::span<const std::pair<int, int>> pairs,
                                    std::optional<int> terminal_h, std::size_t depth) {
    if (depth > pairs.size()) throw std::invalid_argument("depth exceeds pair list");
    for (std::size_t i = 0; i < depth; ++i)
        if (pairs[i].first < 0 || pairs[i].first >= pairs[i].second)
            throw std::invalid_argument("pairs must satisfy 0 <= j < k");
    if (terminal_h && static_cast<std::size_t>(*terminal_h) != depth)
        throw std::invalid_argument("terminal marker must sit at depth");

    // Images of 0 and 1 under sigma_{[1,n]} and the witness words
    // w_n = sigma_{[1,n]}(0) ... sigma_{[1,1]}(0), for n = 0..depth.
    auto apply_images = [](const FiniteWord& i0, const FiniteWord& i1, const FiniteWord& w) {
        FiniteWord out(kBinary);
        for (Letter a : w) out += a == 0 ? i0 : i1;
        return out;
    };
    std::vector<FiniteWord> img0, img1, wn;
    FiniteWord zero(kBinary), one(kBinary);
    zero.push_back(0);
    one.push_back(1);
    img0.push_back(zero);
    img1.push_back(one);
    wn.push_back(FiniteWord(kBinary));
    for (std::size_t n = 0; n < depth; ++n) {
        Substitution tau = Substitution::tau(pairs[n].first, pairs[n].second);
        img0.push_back(apply_images(img0[n], img1[n], tau.image(0)));
        img1.push_back(apply_images(img0[n], img1[n], tau.image(1)));
        wn.push_back(img0[n + 1] + wn[n]);
    }

    std::vector<TrieNode> trie(1);
    auto insert = [&](const FiniteWord& word, Orientation o) {
        int cur = 0;
        for (Letter a : word) {
            int& slot = trie[static_cast<std::size_t>(cur)].child[a];
            if (slot < 0) {
                slot = static_cast<int>(trie.size());
                TrieNode fresh;
                fresh.depth = trie[static_cast<std::size_t>(cur)].depth + 1;
                cur = slot;
                trie.push_back(fresh);
            } else {
                cur = slot;
            }
        }
        auto& node = trie[static_cast<std::size_t>(cur)];
        if (node.orient && *node.orient != o)
            throw std::invalid_argument("conflicting cylinder constraints");
        node.orient = o;
    };

    for (std::size_t n = 0; n < depth; ++n) {
        auto [j, k] = pairs[n];
        for (int i = 0; i <= k; ++i) {
            FiniteWord node = img1[n];
            for (int r = 0; r < i; ++r) node += img0[n];
            node += wn[n];
            bool qualifying = i == j || i == k;
            bool odd_level = n % 2 != 0;
            insert(node, qualifying != odd_level ? Orientation::reversed : Orientation::natural);
        }
    }

    // Completion past the trie. A terminal marker at odd depth requires the
    // whole level-h constraint family to read reversed; those nodes all sit
    // at depth >= |sigma_{[1,h]}(1)| + |w_h|, strictly past every finite
    // constraint, so a depth-counting chain flips the orientation there.
    bool deep_reversed = terminal_h && depth % 2 != 0;
    std::size_t chain_len = deep_reversed ? img1[depth].size() + wn[depth].size() : 0;

    int trie_count = static_cast<int>(trie.size());
    int total = trie_count + static_cast<int>(chain_len) + 1;
    std::vector<DirectionAutomaton::State> states(static_cast<std::size_t>(total));
    auto chain_state = [&](std::size_t d) {
        std::size_t clamped = std::min(d, chain_len);
        return trie_count + static_cast<int>(clamped);
    };
    for (int q = 0; q < trie_count; ++q) {
        const TrieNode& node = trie[static_cast<std::size_t>(q)];
        DirectionAutomaton::State& s = states[static_cast<std::size_t>(q)];
        for (int a = 0; a < 2; ++a)
            s.next[static_cast<std::size_t>(a)] =
                node.child[a] >= 0 ? node.child[a] : chain_state(static_cast<std::size_t>(node.depth) + 1);
        s.orient = node.orient.value_or(Orientation::natural);
    }
    for (std::size_t d = 0; d <= chain_len; ++d) {
        DirectionAutomaton::State& s = states[static_cast<std::size_t>(chain_state(d))];
        int succ = chain_state(d + 1);
        s.next = {succ, succ, succ};
        s.orient = (deep_reversed && d == chain_len) ? Orientation::reversed : Orientation::natural;
    }
    return DirectionAutomaton(2, 0, std::move(states));
}

}  // namespace cyl
