#include "gfo/oracle.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace gfo {

namespace {

// Compositions of n into exactly len parts, lexicographic, prefix in place.
void compositions(int n, int len, std::vector<int>& prefix,
                  const std::function<void(const Word&)>& visit) {
    if (len == 0) {
        if (n == 0) visit(Word(prefix));
        return;
    }
    for (int first = 1; first <= n - (len - 1); ++first) {
        prefix.push_back(first);
        compositions(n - first, len - 1, prefix, visit);
        prefix.pop_back();
    }
}

// Words starting with the given prefix whose total weight is <= max_weight,
// tallied directly into the series.
void tally_suffixes(const Word& u, std::vector<int>& word, int weight,
                    int max_weight, Series& out) {
    out.add_term(static_cast<int>(word.size()), weight,
                 occurrence_count(u, Word(word)), 1);
    for (int next = 1; weight + next <= max_weight; ++next) {
        word.push_back(next);
        tally_suffixes(u, word, weight + next, max_weight, out);
        word.pop_back();
    }
}

}  // namespace

void for_each_word(int max_weight,
                   const std::function<void(const Word&)>& visit) {
    if (max_weight < 0) throw std::invalid_argument("negative weight bound");
    visit(Word{});
    std::vector<int> prefix;
    for (int n = 1; n <= max_weight; ++n)
        for (int len = 1; len <= n; ++len) compositions(n, len, prefix, visit);
}

std::vector<Word> enumerate_words(int max_weight) {
    std::vector<Word> out;
    for_each_word(max_weight, [&](const Word& w) { out.push_back(w); });
    return out;
}

Series brute_force_gf(const Word& u, TruncationSpec trunc, int jobs) {
    if (u.empty()) throw std::invalid_argument("empty pattern");
    const int W = trunc.max_weight;

    // One partition per first letter; the empty word is handled up front.
    std::vector<Series> parts(static_cast<size_t>(W), Series::zero(trunc));
    auto run_partition = [&](int first) {
        std::vector<int> word{first};
        tally_suffixes(u, word, first, W, parts[static_cast<size_t>(first - 1)]);
    };

    if (jobs <= 1) {
        for (int first = 1; first <= W; ++first) run_partition(first);
    } else {
        std::vector<std::thread> workers;
        std::atomic<int> cursor{1};
        for (int t = 0; t < jobs; ++t)
            workers.emplace_back([&] {
                for (int first = cursor.fetch_add(1); first <= W;
                     first = cursor.fetch_add(1))
                    run_partition(first);
            });
        for (auto& th : workers) th.join();
    }

    Series total = Series::monomial(trunc, 0, 0, 0);  // the empty word
    for (const Series& p : parts) total = add(total, p);
    return total;
}

}  // namespace gfo
