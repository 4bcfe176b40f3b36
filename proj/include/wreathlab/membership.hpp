#pragma once

#include <optional>

#include "wreathlab/errors.hpp"
#include "wreathlab/family.hpp"
#include "wreathlab/geodesic.hpp"
#include "wreathlab/level2.hpp"
#include "wreathlab/word.hpp"

namespace wreathlab {

/// Answer to "is this <s, F> word in the embedded image of G_l?". An absent
/// preimage is a certified negative: the length range that any preimage must
/// occupy was enumerated exhaustively. Budget problems throw BudgetExceeded
/// instead of producing a result.
struct MembershipResult {
  std::optional<Word> preimage;  ///< word over G_l (global word when group_index 0)
  bool range_searched = false;   ///< false: settled by the s-exponent fast path
  long long image_geodesic = 0;  ///< geodesic length of the queried element
  long long searched_lo = 0;     ///< preimage length range that was enumerated
  long long searched_hi = 0;
};

/// Decides membership of the element of sf_word in the image of G_l
/// (group_index 0: the whole direct sum). Computes the geodesic length L of
/// the element with the reduced word length as cap, then enumerates canonical
/// preimage candidates with lengths in [L/C, C*L] for C = 2^(M+2); any
/// preimage would have one of these lengths, so exhaustion certifies absence.
MembershipResult membership(const Family& fam, int group_index, const Word& sf_word,
                            const SearchLimits& limits = {}, GeodesicCache* cache = nullptr);

}  // namespace wreathlab
