#ifndef GFO_ORACLE_HPP
#define GFO_ORACLE_HPP

#include <functional>
#include <vector>

#include "gfo/series.hpp"
#include "gfo/word.hpp"

namespace gfo {

// Streams every word of weight <= max_weight exactly once, empty word
// included, ordered by (weight, length, lexicographic).
void for_each_word(int max_weight, const std::function<void(const Word&)>& visit);

std::vector<Word> enumerate_words(int max_weight);

// A_u by direct definition: tally x^|w| y^||w|| z^occurrences over all words
// of weight <= trunc.max_weight, occurrences counted by naive window scans.
// jobs > 1 partitions the word space by first letter; the merge is additive,
// so the result is independent of jobs.
Series brute_force_gf(const Word& u, TruncationSpec trunc, int jobs = 1);

}  // namespace gfo

#endif
