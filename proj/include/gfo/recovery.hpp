#ifndef GFO_RECOVERY_HPP
#define GFO_RECOVERY_HPP

#include <functional>
#include <map>
#include <vector>

#include "gfo/clusters.hpp"
#include "gfo/series.hpp"
#include "gfo/word.hpp"

namespace gfo {

// Signed count per column subset: the symbolic value of the coefficient
// combination ([x^(2k+i-2) z^k] - [x^(2k+i-3) z^(k-1)] - ... - [x^(2k-2)
// z^(k-1)]) M_u after the y-derivative at 1 turns weight sums into subset
// multisets.
struct SignedSubsetMultiset {
    int k;
    std::map<IndexSet, long long> counts;  // zero entries are never stored
};

// +1 for every column of every k-pre-cluster of length 2k+i-2, -1 for every
// column of every (k-1)-pre-cluster of the lengths 2k-2 .. 2k+i-3.
SignedSubsetMultiset ddagger_symbolic(int k, int i);

// Lower-triangular positive-diagonal system mapping (lambda_1..lambda_i) to
// the i-th signed coefficient combination. Row i has entries
// a_{i,j} = sum_h c_h * binom(k-j, h-1) over the subset sizes h present.
struct RecoveryMatrix {
    int k;
    std::vector<std::vector<long long>> rows;  // rows[i-1] has i entries
    // Per row, multiplicity of each subset size class in the symbolic value.
    std::vector<std::map<int, long long>> size_multiplicities;
};

// Derives the matrix by symbolic enumeration. Throws std::logic_error with
// diagnostics if any final multiplicity is negative or a size class is not
// uniform; that would falsify the construction and must never be averaged
// over.
RecoveryMatrix recovery_matrix(int k);

// Abstract coefficient access to some M_u: (n, m) -> exact [x^n z^m] M_u.
// Recovery consumes only this view, never the word itself.
struct MuOracle {
    int k;
    int min_weight;  // smallest exponent of y in M, i.e. the pattern weight
    std::function<YPolynomial(int n, int m)> coeff;
};

MuOracle mu_oracle_from_word(const Word& u);

Int ddagger_numeric(const MuOracle& mu, int i);

// The sorted letter multiset of the unknown pattern, from series data alone.
Partition recover_partition(const MuOracle& mu);

// recover_partition plus the intermediate values, for reporting.
struct RecoveryRun {
    Partition lambda;
    RecoveryMatrix matrix;        // empty rows when k = 1
    std::vector<Int> ddagger;     // values for i = 1..k-1
};

RecoveryRun recover_details(const MuOracle& mu);

}  // namespace gfo

#endif
