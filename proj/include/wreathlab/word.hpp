#pragma once

#include <string>
#include <vector>

namespace wreathlab {

/// One signed generator occurrence. Generator indices are 1-based throughout.
struct Letter {
  int gen = 0;
  int sign = +1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word is a finite sequence of letters. The same type carries words over a
/// single group's generators, over a family's global generators, and over the
/// two-letter alphabet {s, F} (gen 1 = s, gen 2 = F).
using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
bool freely_trivial(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

/// Largest generator index appearing in w, 0 if empty.
int max_generator(const Word& w);

/// Parses "x1 x2^-1 x1^3": whitespace-separated tokens, one generator each,
/// optional ^e exponent (|e| copies, e != 0). Empty input is the identity.
Word parse_generator_word(const std::string& text);

/// Parses a word over {s, F}. Token form first ("s F^-1 s^2"); if that fails,
/// compact form, one letter per character: s, S, f, F = s, s^-1, F, F^-1.
Word parse_sf_word(const std::string& text);

/// Inverse of parsing, with runs compressed: "x1^2 x2^-1".
std::string format_generator_word(const Word& w);
std::string format_sf_word(const Word& w);

}  // namespace wreathlab
