#pragma once

#include <optional>
#include <string>

#include "wreathlab/errors.hpp"
#include "wreathlab/family.hpp"
#include "wreathlab/level2.hpp"

namespace wreathlab {

/// Advisory store for geodesic lengths. A miss or a dropped write never
/// changes an answer, only the time to compute it.
class GeodesicCache {
 public:
  virtual ~GeodesicCache() = default;
  virtual std::optional<long long> get(const std::string& key) = 0;
  virtual void put(const std::string& key, long long value) = 0;
};

/// Cache key: family digest, element serialization, cap. Cap is part of the
/// key because a "nothing within cap" answer is only valid at its own cap.
std::string geodesic_cache_key(const Family& fam, const Level2Element& e, long long cap);

/// Length of a shortest word over {s, s^-1, F, F^-1} that collects to an
/// element equal to e, if that length is at most cap; nullopt when every
/// word of length <= cap misses e. Runs a bidirectional breadth-first search
/// over canonical element keys, so the two frontiers each reach only about
/// half the cap depth. Budget exhaustion throws BudgetExceeded (and is never
/// cached); a nullopt is always a certified negative.
std::optional<long long> geodesic_length(const Level2Element& e, const Family& fam, long long cap,
                                         const SearchLimits& limits = {},
                                         GeodesicCache* cache = nullptr);

}  // namespace wreathlab
