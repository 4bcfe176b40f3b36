#include "wreathlab/qi.hpp"

#include <climits>

#include "wreathlab/errors.hpp"

namespace wreathlab {

QiConstants lipschitz_constants(const Family& fam, int group_index) {
  long long m = 0;
  if (group_index == 0) {
    if (!fam.is_finite())
      throw UnsupportedError("whole-direct-sum constants need a finite family");
    m = fam.global_generator_count();
  } else {
    m = fam.max_global_index(group_index);
  }
  if (m + 2 > 62)
    throw UnsupportedError("2^(M+2) does not fit 64-bit arithmetic for this family");
  QiConstants q;
  q.C = {1LL << (m + 2), 1};
  q.k = {0, 1};
  return q;
}

std::pair<long long, long long> preimage_length_range(const QiConstants& q, long long L) {
  // lo = ceil(L/C - k), hi = floor(C*L + k); everything through __int128 so
  // large C values saturate at LLONG_MAX instead of wrapping.
  const __int128 cn = q.C.num, cd = q.C.den, kn = q.k.num, kd = q.k.den;
  const __int128 lo_num = static_cast<__int128>(L) * cd * kd - kn * cn;
  const __int128 lo_den = cn * kd;
  __int128 lo = lo_num / lo_den;
  if (lo * lo_den < lo_num) ++lo;
  if (lo < 0) lo = 0;

  const __int128 hi_num = cn * L * kd + kn * cd;
  const __int128 hi_den = cd * kd;
  __int128 hi = hi_num / hi_den;
  if (hi > LLONG_MAX) hi = LLONG_MAX;

  return {static_cast<long long>(lo), static_cast<long long>(hi)};
}

}  // namespace wreathlab
