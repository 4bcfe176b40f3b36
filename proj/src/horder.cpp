#include "wreathlab/horder.hpp"

#include <string>

#include "wreathlab/errors.hpp"

namespace wreathlab {

namespace {

// Finite families are checked up front so unorderable groups surface even on
// elements that never touch them; enumerated families are checked lazily by
// direct_sum_sign at the groups a value actually references.
void require_orderable(const Family& fam) {
  if (!fam.is_finite()) return;
  for (int i = 1; i <= fam.group_count(); ++i)
    if (!fam.group(i).orderable())
      throw UnsupportedError("group " + std::to_string(i) + " (" + fam.group(i).name +
                             ") has no left-order decider");
}

}  // namespace

OrderSign sign_l1(const Level1Element& e, const Family& fam) {
  require_orderable(fam);
  if (!e.factors.empty()) {
    const auto [lo, hi] = l1_window(e);
    for (long long m = lo; m <= hi; ++m) {
      const OrderSign s = direct_sum_sign(fam, eval_l1(e, m));
      if (s != OrderSign::zero) return s;
    }
    // Above the window the value is constant and equal to the one at hi,
    // below it empty, so a fully trivial scan means a trivial function part.
  }
  return sign_of(e.t_exp);
}

OrderSign sign_l2(const Level2Element& e, const Family& fam) {
  require_orderable(fam);
  // Support points are ascending and cover every possibly-nontrivial value,
  // so the first nontrivial one is the least nontrivial integer.
  for (long long k : l2_support_points(e, fam)) {
    const OrderSign s = sign_l1(eval_l2(e, k, fam), fam);
    if (s != OrderSign::zero) return s;
  }
  return sign_of(e.s_exp);
}

OrderSign compare_l2(const Level2Element& a, const Level2Element& b, const Family& fam) {
  return sign_l2(l2_mul(l2_inv(a), b), fam);
}

}  // namespace wreathlab
