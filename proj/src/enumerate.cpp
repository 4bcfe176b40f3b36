#include "wreathlab/enumerate.hpp"

#include "wreathlab/canonical_enum.hpp"
#include "wreathlab/membership.hpp"

namespace wreathlab {

std::vector<HElement> enumerate_H(const Family& fam, long long cap, const SearchLimits& limits) {
  if (cap < 0) throw InputError("count cap must be nonnegative");
  std::vector<HElement> out;
  if (cap == 0) return out;
  const EnumStatus status = canonical_words<Level2Element>(
      2, l2_identity(),
      [](const Level2Element& e, Letter l) {
        return l2_mul(e, l.gen == 1 ? l2_s(l.sign) : l2_F(l.sign));
      },
      [&fam](const Level2Element& e) { return l2_key(e, fam); },
      [&](const Word& w, const Level2Element& e) {
        out.push_back(HElement{w, e});
        return static_cast<long long>(out.size()) < cap;
      },
      limits.node_budget, limits.cancel);
  if (status == EnumStatus::budget_exhausted)
    throw BudgetExceeded("element enumeration: node budget exhausted");
  return out;
}

std::vector<OrderListEntry> induced_order_list(const Family& fam, int group_index,
                                               long long scan_cap, const SearchLimits& limits,
                                               GeodesicCache* cache) {
  std::vector<OrderListEntry> out;
  for (const HElement& h : enumerate_H(fam, scan_cap, limits)) {
    MembershipResult m = membership(fam, group_index, h.sf_word, limits, cache);
    if (!m.preimage) continue;
    OrderListEntry entry;
    entry.sf_word = h.sf_word;
    entry.sign = sign_l2(h.element, fam);
    entry.preimage = std::move(*m.preimage);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace wreathlab
