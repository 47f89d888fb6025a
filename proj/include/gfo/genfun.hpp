#ifndef GFO_GENFUN_HPP
#define GFO_GENFUN_HPP

#include "gfo/series.hpp"
#include "gfo/word.hpp"

namespace gfo {

// xy/(1-y): the generating function of a single letter, truncated.
Series letter_gf(TruncationSpec trunc);

// 1/(1 - xy/(1-y)): all words, graded by length and weight.
Series all_words_gf(TruncationSpec trunc);

// C_u = M_u(x/(1-y), y, z).
Series cluster_gf(const Word& u, TruncationSpec trunc);

// A_u(x,y,0) = 1/(1 - xy/(1-y) - C_u(x,y,-1)).
Series avoidance_gf(const Word& u, TruncationSpec trunc);

// A_u(x,y,z) = 1/(1 - xy/(1-y) - C_u(x,y,z-1)).
Series full_gf(const Word& u, TruncationSpec trunc);

// M_u -> M_1u: xy M/(1 - M). Minimal clusters of 1u are concatenations of a
// prepended 1 and a nonempty sequence of minimal clusters of u.
Series prepend_transform(const Series& M);

// M_u -> M_u+ via x -> xy, and its inverse via x -> x/y.
Series plus_transform(const Series& M);
Series unplus_transform(const Series& M);

}  // namespace gfo

#endif
