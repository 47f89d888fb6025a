#ifndef GFO_TEST_UTIL_HPP
#define GFO_TEST_UTIL_HPP

#include <cstdint>
#include <random>

#include "gfo/series.hpp"
#include "gfo/word.hpp"

// Set from --seed before doctest runs; printed at startup.
extern std::uint64_t g_seed;

inline std::mt19937_64 test_rng(std::uint64_t salt = 0) {
    return std::mt19937_64(g_seed ^ (salt * 0x9e3779b97f4a7c15ull));
}

inline gfo::Word random_word(std::mt19937_64& rng, int max_len, int max_entry) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> entry_dist(1, max_entry);
    std::vector<int> entries(static_cast<size_t>(len_dist(rng)));
    for (int& e : entries) e = entry_dist(rng);
    return gfo::Word(std::move(entries));
}

// Sparse random series for ring-axiom style properties.
inline gfo::Series random_series(std::mt19937_64& rng, gfo::TruncationSpec trunc,
                                 int terms, int coeff_bound) {
    std::uniform_int_distribution<int> deg(0, trunc.max_weight);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    gfo::Series s = gfo::Series::zero(trunc);
    for (int t = 0; t < terms; ++t)
        s.add_term(deg(rng), deg(rng), deg(rng), gfo::Int(coeff(rng)));
    return s;
}

#endif
