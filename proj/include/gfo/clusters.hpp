#ifndef GFO_CLUSTERS_HPP
#define GFO_CLUSTERS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gfo/series.hpp"
#include "gfo/word.hpp"

namespace gfo {

// Offset alignment of m overlapping copies of a length-k pattern: o_1 = 0 and
// consecutive gaps lie in [1, k-1], so neighbouring rows overlap in at least
// one column and occupy distinct start positions.
struct PreCluster {
    int k;
    std::vector<int> offsets;

    int rows() const { return static_cast<int>(offsets.size()); }
    int length() const { return offsets.back() + k; }
};

// Subset of pattern indices {1..k}, stored as a bitmask (bit i-1 for index i).
// Ordered by (size, lexicographic index list) -- the chart column order.
struct IndexSet {
    uint32_t mask = 0;

    int size() const;
    std::vector<int> indices() const;     // ascending, 1-based
    std::string str() const;              // "1,3,4"

    bool operator==(const IndexSet&) const = default;
    bool operator<(const IndexSet&) const;
};

// The column description of a pre-cluster: column p holds the pattern indices
// of the rows covering position p. First column is {1}, last is {k}.
struct SymbolicCluster {
    int k;
    std::vector<IndexSet> columns;
};

// Occurrence counts of each subset among all symbolic m-clusters, by length.
struct Chart {
    int k;
    int m;
    std::map<int, std::map<IndexSet, long long>> rows;
};

// All m-row pre-clusters of a length-k pattern, in lexicographic gap order.
// Empty when impossible (k = 1 with m >= 2).
std::vector<PreCluster> enumerate_preclusters(int k, int m);

// Those of length exactly L: gap compositions of L-k into m-1 parts in [1,k-1].
std::vector<PreCluster> enumerate_preclusters_by_length(int k, int m, int L);

// Entry at position p is max{ u_j : j in column p }; length is P.length().
Word cluster_word(const Word& u, const PreCluster& P);

SymbolicCluster symbolic_cluster(const PreCluster& P);

// Minimal-cluster generating function M_u: sum over pre-clusters of
// z^m x^length y^weight(cluster word), truncated at trunc.max_weight.
Series minimal_cluster_gf(const Word& u, TruncationSpec trunc);

// The exact (untruncated) y-polynomial [x^n z^m] M_u.
YPolynomial mu_coefficient_poly(const Word& u, int n, int m);

Chart chart(int k, int m);

// Visits every pre-cluster of u whose cluster word has weight <= max_weight,
// with the cluster word alongside. Deterministic order: m ascending would be
// natural, but the walk is depth-first over appended rows; consumers must not
// rely on visit order.
void for_each_cluster_within_weight(
    const Word& u, int max_weight,
    const std::function<void(const PreCluster&, const Word&)>& visit);

// Chart rendering: rows ascending by length, columns by (|I|, lex), blank
// cells for zero.
std::string chart_text(const Chart& chart);

}  // namespace gfo

#endif
