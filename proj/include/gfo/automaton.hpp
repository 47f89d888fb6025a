#ifndef GFO_AUTOMATON_HPP
#define GFO_AUTOMATON_HPP

#include <cstdint>
#include <vector>

#include "gfo/series.hpp"
#include "gfo/word.hpp"

namespace gfo {

// Maximal interval of positive integers sharing one dominance profile against
// the pattern: profile bit j-1 answers "does every letter of the class
// dominate u_j". The last class is unbounded (hi = 0 encodes infinity).
struct LetterClass {
    int lo;
    int hi;            // 0 means unbounded
    uint32_t profile;  // bit j-1 set iff class letters >= u_j

    bool unbounded() const { return hi == 0; }
    bool profile_at(int j) const { return (profile >> (j - 1)) & 1u; }  // 1-based

    // sum of x y^t over the letters t of the class, truncated.
    Series weight_gf(TruncationSpec trunc) const;
};

std::vector<LetterClass> letter_classes(const Word& u);

// Subset-of-prefix-lengths determinization of nondeterministic dominance
// matching. A state is the set of lengths j (0 always included) such that the
// last j letters read dominate u_1..u_j. Exactly one occurrence can end at
// each position, so transitions emit 0 or 1.
struct DominanceAutomaton {
    struct Transition {
        int target;
        bool emit;
    };

    int k;
    std::vector<LetterClass> classes;
    std::vector<uint32_t> states;  // bitmask over {0..k-1}; states[0] = {0}
    std::vector<std::vector<Transition>> transitions;  // [state][class]

    static DominanceAutomaton build(const Word& u);
};

// A_u(x,y,z) by dynamic programming over word length. With count_occurrences
// false, occurrence-completing transitions are pruned instead of marked,
// which yields the avoidance language and A_u(x,y,0).
Series automaton_gf(const Word& u, TruncationSpec trunc, bool count_occurrences);

}  // namespace gfo

#endif
