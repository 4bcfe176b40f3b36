#pragma once

#include "wreathlab/group.hpp"
#include "wreathlab/word.hpp"

namespace wreathlab {

/// Order sign of a free-group word via its Magnus expansion: substitute
/// x_i -> 1 + X_i into the word, truncate at total degree max_degree, and take
/// the sign of the first nonzero coefficient of (expansion - 1) with monomials
/// scanned in graded-lex order (degree first, then X_1 < X_2 < ... on index
/// sequences). Truncating at the reduced word length loses nothing: for a
/// reduced word with syllables x_{j1}^{e1} ... x_{jm}^{em} the monomial
/// X_{j1} X_{j2} ... X_{jm} has the single coefficient e1*e2*...*em != 0,
/// because adjacent syllable variables differ, so the only way to assemble that
/// monomial from per-syllable blocks picks degree one from every syllable.
OrderSign magnus_sign(const Word& word, int max_degree);

}  // namespace wreathlab
