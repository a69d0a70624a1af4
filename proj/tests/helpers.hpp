#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cyl/io.hpp"
#include "cyl/words.hpp"

namespace cyltest {

using namespace cyl;

// "10T1" -> finite word; T stands for -1.
inline FiniteWord fw(const std::string& s, Alphabet alpha = kBinary) {
    FiniteWord w(alpha);
    for (char c : s) w.push_back(c == 'T' ? -1 : c - '0');
    return w;
}

// EPWord from the CLI syntax, e.g. "1(0)" or "(10)".
inline EPWord ep(const std::string& text) { return parse_word(text); }
inline EPWord ep(const std::string& text, Alphabet alpha) { return parse_word(text, alpha); }

inline FiniteWord random_fw(std::mt19937_64& rng, std::size_t len, Alphabet alpha = kBinary) {
    std::uniform_int_distribution<int> d(alpha.lo, alpha.hi);
    FiniteWord w(alpha);
    for (std::size_t i = 0; i < len; ++i) w.push_back(d(rng));
    return w;
}

inline EPWord random_ep(std::mt19937_64& rng, std::size_t max_pre, std::size_t max_per,
                        Alphabet alpha = kBinary) {
    std::uniform_int_distribution<std::size_t> pre(0, max_pre), per(1, max_per);
    return EPWord(random_fw(rng, pre(rng), alpha), random_fw(rng, per(rng), alpha));
}

inline std::vector<std::pair<int, int>> random_pairs(std::mt19937_64& rng, std::size_t depth,
                                                     int k_cap = 3) {
    std::vector<std::pair<int, int>> pairs;
    std::uniform_int_distribution<int> dj(0, k_cap - 1);
    for (std::size_t i = 0; i < depth; ++i) {
        int j = dj(rng);
        std::uniform_int_distribution<int> dk(j + 1, k_cap);
        pairs.emplace_back(j, dk(rng));
    }
    return pairs;
}

}  // namespace cyltest
