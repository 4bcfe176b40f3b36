#include "wreathlab/frattini.hpp"

#include <utility>

#include "wreathlab/ball.hpp"
#include "wreathlab/canonical_enum.hpp"
#include "wreathlab/level2.hpp"

namespace wreathlab {

const char* to_string(FrattiniOutcome o) {
  switch (o) {
    case FrattiniOutcome::conjugate_in_g: return "conjugate_in_G";
    case FrattiniOutcome::conjugate_in_h_only: return "conjugate_in_H_only";
    case FrattiniOutcome::no_witness_found: return "no_witness_found";
  }
  return "no_witness_found";
}

FrattiniResult frattini_witness_search(const Family& fam, int group_index, const Word& g1,
                                       const Word& g2, int radius, const SearchLimits& limits) {
  if (radius < 0) throw InputError("radius must be nonnegative");
  const GroupDescriptor g =
      group_index == 0 ? direct_sum_descriptor(fam) : fam.group(group_index);
  check_word(g, g1);
  check_word(g, g2);

  FrattiniResult out;

  // Conjugators act by c g1 c^-1; dedup by element is sound since the
  // conjugate depends only on the element of c.
  const BallResult candidates = ball(g, radius, limits.node_budget, limits.cancel);
  if (candidates.capped) throw BudgetExceeded("conjugator ball: node budget exhausted");
  for (const Word& c : candidates.words) {
    const Word test = concat(concat(c, g1), concat(inverse(c), inverse(g2)));
    if (g.trivial(test)) {
      out.outcome = FrattiniOutcome::conjugate_in_g;
      out.witness_g = c;
      return out;
    }
  }

  // Same search one level up, over conjugators d in <s, F>.
  const Level2Element e1 = embed(fam, group_index, g1);
  const Level2Element e2_inv = l2_inv(embed(fam, group_index, g2));
  std::optional<Word> hit;
  const EnumStatus status = canonical_words<Level2Element>(
      2, l2_identity(),
      [](const Level2Element& e, Letter l) {
        return l2_mul(e, l.gen == 1 ? l2_s(l.sign) : l2_F(l.sign));
      },
      [&fam](const Level2Element& e) { return l2_key(e, fam); },
      [&](const Word& w, const Level2Element& d) {
        if (static_cast<int>(w.size()) > radius) return false;
        const Level2Element conj = l2_mul(l2_mul(d, e1), l2_mul(l2_inv(d), e2_inv));
        if (l2_is_trivial(conj, fam)) {
          hit = w;
          return false;
        }
        return true;
      },
      limits.node_budget, limits.cancel);
  if (status == EnumStatus::budget_exhausted)
    throw BudgetExceeded("conjugator enumeration: node budget exhausted");
  if (hit) {
    out.outcome = FrattiniOutcome::conjugate_in_h_only;
    out.witness_h = std::move(*hit);
  }
  return out;
}

}  // namespace wreathlab
