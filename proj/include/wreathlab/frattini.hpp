#pragma once

#include <optional>
#include <string>

#include "wreathlab/errors.hpp"
#include "wreathlab/family.hpp"
#include "wreathlab/word.hpp"

namespace wreathlab {

/// Outcome of the bounded conjugacy audit. conjugate_in_h_only means the
/// images are conjugate while no G conjugator within the radius exists;
/// since the embedding reflects conjugacy, that can only happen when every
/// G witness is longer than the radius, and it is expected never to occur on
/// audited pairs. no_witness_found is an honest inconclusive, not a proof of
/// non-conjugacy.
enum class FrattiniOutcome { conjugate_in_g, conjugate_in_h_only, no_witness_found };

const char* to_string(FrattiniOutcome o);

struct FrattiniResult {
  FrattiniOutcome outcome = FrattiniOutcome::no_witness_found;
  std::optional<Word> witness_g;  ///< c in G_l with c g1 c^-1 = g2
  std::optional<Word> witness_h;  ///< d over {s, F} with d E1 d^-1 = E2
};

/// Searches conjugators of word length <= radius, first in G_l over its own
/// generators, then (only if none was found) in <s, F> over {s, F}, taking
/// E1, E2 to be the embedded images of g1, g2.
FrattiniResult frattini_witness_search(const Family& fam, int group_index, const Word& g1,
                                       const Word& g2, int radius,
                                       const SearchLimits& limits = {});

}  // namespace wreathlab
