#ifndef GFO_FIXTURES_HPP
#define GFO_FIXTURES_HPP

#include <vector>

#include "gfo/clusters.hpp"

namespace gfo {

// Frozen reference data for k = 4, transcribed from the published tables and
// kept independent of the enumeration code so that regressions cannot
// silently agree with themselves.

// Occurrence chart of subset columns across all m-row pre-clusters, m = 2..4.
Chart reference_chart_k4(int m);

// Number of m-row pre-clusters for m = 2..4: 3, 9, 27.
long long reference_precluster_count_k4(int m);

// Lower-triangular recovery coefficients: rows (1), (3 1), (6 3 1).
std::vector<std::vector<long long>> reference_recovery_matrix_k4();

// Signed coefficient combinations for the pattern 3123: i = 1..3.
std::vector<long long> reference_ddagger_3123();

// Sorted letter multiset of 3123.
std::vector<int> reference_lambda_3123();

}  // namespace gfo

#endif
