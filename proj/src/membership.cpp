#include "wreathlab/membership.hpp"

#include <stdexcept>
#include <string>

#include "wreathlab/canonical_enum.hpp"
#include "wreathlab/qi.hpp"

namespace wreathlab {

MembershipResult membership(const Family& fam, int group_index, const Word& sf_word,
                            const SearchLimits& limits, GeodesicCache* cache) {
  const Level2Element e = l2_collect(sf_word);
  const QiConstants q = lipschitz_constants(fam, group_index);

  // Every embedded image has s-exponent 0, so a nonzero one is an immediate
  // certified negative.
  MembershipResult out;
  if (e.s_exp != 0) return out;

  out.range_searched = true;
  const Word reduced = free_reduce(sf_word);
  const long long cap = static_cast<long long>(reduced.size());
  const auto maybe_len = geodesic_length(e, fam, cap, limits, cache);
  if (!maybe_len)
    throw std::logic_error("geodesic within the reduced word length must exist");
  const long long L = *maybe_len;
  out.image_geodesic = L;

  const auto [lo, hi] = preimage_length_range(q, L);
  out.searched_lo = lo;
  out.searched_hi = hi;

  const int generators =
      group_index == 0 ? fam.global_generator_count() : fam.group(group_index).generator_count;
  auto element_key = [&](const Word& w) {
    return group_index == 0 ? direct_sum_key(fam, w) : fam.group(group_index).element_key(w);
  };

  const Level2Element e_inv = l2_inv(e);
  const EnumStatus status = canonical_words<Word>(
      generators, Word{},
      [](const Word& w, Letter l) {
        Word next = w;
        next.push_back(l);
        return next;
      },
      element_key,
      [&](const Word& w, const Word&) {
        const long long len = static_cast<long long>(w.size());
        if (len > hi) return false;
        if (len < lo) return true;
        if (l2_is_trivial(l2_mul(embed(fam, group_index, w), e_inv), fam)) {
          out.preimage = w;
          return false;
        }
        return true;
      },
      limits.node_budget, limits.cancel);

  if (status == EnumStatus::budget_exhausted && !out.preimage)
    throw BudgetExceeded("membership enumeration: node budget exhausted");
  return out;
}

}  // namespace wreathlab
