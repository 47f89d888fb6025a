#ifndef GFO_EQUIV_HPP
#define GFO_EQUIV_HPP

#include <string>
#include <vector>

#include "gfo/series.hpp"
#include "gfo/word.hpp"

namespace gfo {

// Classification keys: canonical serializations of the truncated avoidance /
// full generating functions. Key equality is byte equality; it means
// "indistinguishable up to weight W", never proven equivalence. Inequality
// is a definitive non-equivalence.
std::string wilf_key(const Word& u, TruncationSpec trunc);
std::string strong_key(const Word& u, TruncationSpec trunc);

// Short stable digest of a key, for reports (FNV-1a 64, hex).
std::string key_hash(const std::string& key);

struct EquivalenceClass {
    std::vector<Word> members;  // sorted by (weight, length, lex)
    std::string wilf_hash;
    std::string strong_hash;
    Partition partition;        // of the first member; shared when no violation
};

struct WilfStrongMismatch {
    std::vector<Word> wilf_class;
    std::vector<std::vector<Word>> strong_classes;
};

struct RearrangementViolation {
    std::vector<Word> members;
    std::vector<Partition> partitions;
};

struct EquivalenceReport {
    int max_word_weight;
    int max_factor_weight;
    std::string population;
    std::vector<EquivalenceClass> classes;  // Wilf classes
    std::vector<WilfStrongMismatch> wilf_strong_mismatches;
    std::vector<RearrangementViolation> rearrangement_violations;
};

// Buckets every word of weight <= max_factor_weight by Wilf key, then splits
// each bucket by strong key, and checks (a) Wilf class = strong class and
// (b) each class lies inside one rearrangement class. jobs parallelizes the
// key computation; the report is independent of jobs.
EquivalenceReport classify(int max_factor_weight, int max_word_weight,
                           int jobs = 1);

// Closed rational form N/D with exact integer coefficients, D(0,0) = 1.
struct RationalFixture {
    std::string pattern;
    std::vector<std::tuple<int, int, long long>> numerator;    // (a, b, coeff)
    std::vector<std::tuple<int, int, long long>> denominator;

    int denominator_y_degree() const;
};

// Published closed forms for the avoidance series of 122 and 212.
RationalFixture rational_fixture_122();
RationalFixture rational_fixture_212();

// True iff D * avoidance_gf(pattern) matches N on every monomial of y-degree
// <= max_check_degree. The default bound is max_weight - deg_y(D); anything
// up to max_weight is sound, because multiplying a series that is exact to
// weight W by a polynomial stays exact to weight W.
bool verify_rational(const RationalFixture& fixture, TruncationSpec trunc,
                     int max_check_degree = -1);

// The minimal-cluster identities behind reverse / prepend / increment
// equivalences, each checked as truncated series equality.
struct We1Report {
    bool reverse_ok;   // M_(u reversed) = M_u
    bool prepend_ok;   // M_(1u) = xy M_u / (1 - M_u)
    bool plus_ok;      // M_(u+) = M_u(xy, y, z)
    bool unplus_ok;    // M_u = M_(u+)(x/y, y, z)

    bool all() const { return reverse_ok && prepend_ok && plus_ok && unplus_ok; }
};

We1Report check_prop_we1(const Word& u, TruncationSpec trunc);

// Pairwise transfer of key equality under the prepend / increment maps, for
// both Wilf and strong keys. Forward directions hold at the same horizon.
// Converse directions lose resolution: M_(1u) at W determines M_u at W-1,
// and M_(u+) at W determines M_u only where a+b <= W, hence weight <= W/2.
// Each flag is an implication, so a false premise passes vacuously.
struct We1PairReport {
    bool prepend_forward;   // keys(u,v) equal at W  => keys(1u,1v) equal at W
    bool prepend_converse;  // keys(1u,1v) equal at W => keys(u,v) equal at W-1
    bool plus_forward;      // keys(u,v) equal at W  => keys(u+,v+) equal at W
    bool plus_converse;     // keys(u+,v+) equal at W => keys(u,v) equal at W/2

    bool all() const {
        return prepend_forward && prepend_converse && plus_forward &&
               plus_converse;
    }
};

We1PairReport check_prop_we1(const Word& u, const Word& v, TruncationSpec trunc);

// a1b2c vs a2b1c (a,b,c >= 2), and the general axbyc vs aybxc
// (a,b,c >= x,y), as strong-key equality at the truncation.
bool check_theorem_we3(int a, int b, int c, TruncationSpec trunc);
bool check_axbyc(int a, int x, int b, int y, int c, TruncationSpec trunc);

}  // namespace gfo

#endif
