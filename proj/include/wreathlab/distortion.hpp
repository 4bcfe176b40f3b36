#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wreathlab/errors.hpp"
#include "wreathlab/family.hpp"
#include "wreathlab/geodesic.hpp"
#include "wreathlab/qi.hpp"
#include "wreathlab/word.hpp"

namespace wreathlab {

/// One audited ball element. len_h_upper is the length of the constructed
/// image word, so len_g <= len_h_exact <= len_h_upper <= C * len_g must hold
/// whenever the exact geodesic was computed; ok records whether every
/// applicable inequality held.
struct DistortionRow {
  Word g;
  long long len_g = 0;
  long long len_h_upper = 0;
  std::optional<long long> len_h_exact;
  bool ok = true;
};

struct DistortionReport {
  std::vector<DistortionRow> rows;
  Rational c_bound;
};

/// Audits the two-sided length bound over the whole radius ball of G_l
/// (group_index 0: the direct sum). Exact geodesics use the image word
/// length as cap, so they always exist mathematically; rows whose geodesic
/// search ran out of budget, or whose cap exceeds max_exact_cap when that is
/// nonnegative, carry only the upper bound. An incomplete ball enumeration
/// throws BudgetExceeded since a partial audit would be misleading.
DistortionReport lipschitz_audit(const Family& fam, int group_index, int radius,
                                 const SearchLimits& limits = {}, GeodesicCache* cache = nullptr,
                                 long long max_exact_cap = -1);

/// CSV with header word,len_G,len_H_upper,len_H_exact,C_bound,ok; the
/// len_H_exact cell is empty on upper-bound-only rows.
std::string distortion_csv(const DistortionReport& report);

}  // namespace wreathlab
