#pragma once

#include <vector>

#include "wreathlab/errors.hpp"
#include "wreathlab/group.hpp"

namespace wreathlab {

/// Result of a ball enumeration. `capped` means the node budget ran out and
/// `words` holds only the part found so far; callers must not treat a capped
/// result as the complete ball.
struct BallResult {
  std::vector<Word> words;
  bool capped = false;
};

/// Canonical shortlex words for the distinct elements of the radius-r ball,
/// identity first. The canonical word of an element is also a geodesic, since
/// elements are first reached at their true distance.
BallResult ball(const GroupDescriptor& g, int radius, long long node_budget = 4'000'000,
                const CancelToken* cancel = nullptr);

}  // namespace wreathlab
