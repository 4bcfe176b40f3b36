#pragma once

#include <vector>

#include "wreathlab/errors.hpp"
#include "wreathlab/family.hpp"
#include "wreathlab/geodesic.hpp"
#include "wreathlab/horder.hpp"
#include "wreathlab/level2.hpp"
#include "wreathlab/word.hpp"

namespace wreathlab {

/// One enumerated element of <s, F>: its first shortlex word (which is a
/// geodesic) and the collected element.
struct HElement {
  Word sf_word;
  Level2Element element;
};

/// The first `cap` distinct elements of <s, F> in shortlex word order,
/// identity first. Letter order: s < s^-1 < F < F^-1. Increasing the cap
/// extends the sequence without reordering it.
std::vector<HElement> enumerate_H(const Family& fam, long long cap,
                                  const SearchLimits& limits = {});

struct OrderListEntry {
  Word sf_word;
  OrderSign sign = OrderSign::zero;
  Word preimage;  ///< membership witness in G_l (global word for group 0)
};

/// Filters the first `scan_cap` elements of <s, F> through membership in the
/// image of G_l and pairs each survivor with its left-order sign. The scan
/// cap counts examined elements, not survivors.
std::vector<OrderListEntry> induced_order_list(const Family& fam, int group_index,
                                               long long scan_cap,
                                               const SearchLimits& limits = {},
                                               GeodesicCache* cache = nullptr);

}  // namespace wreathlab
