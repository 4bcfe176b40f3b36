#pragma once

#include <utility>

#include "wreathlab/family.hpp"

namespace wreathlab {

/// Nonnegative rational with positive denominator, kept in lowest terms.
struct Rational {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Constants of a quasi-isometric embedding:
///   |g| / C - k <= |image(g)| <= C * |g| + k, with C >= 1, k >= 0.
struct QiConstants {
  Rational C{1, 1};
  Rational k{0, 1};
};

/// Certified constants for the embedding of G_l into <s, F>: C = 2^(M+2) and
/// k = 0, where M is the largest global generator index in G_l (for
/// group_index 0, the whole direct sum, M is the total generator count).
/// In fact the stronger left bound |g| <= |image(g)| holds, but only the
/// two-sided C bound is used downstream.
QiConstants lipschitz_constants(const Family& fam, int group_index);

/// [ceil(L / C - k), floor(C * L + k)] clamped below at 0: the range of
/// preimage lengths compatible with an image of geodesic length L. The upper
/// end saturates instead of overflowing.
std::pair<long long, long long> preimage_length_range(const QiConstants& q, long long L);

}  // namespace wreathlab
