#pragma once

#include "wreathlab/family.hpp"
#include "wreathlab/level1.hpp"
#include "wreathlab/level2.hpp"

namespace wreathlab {

/// Left-order sign at level 1: the direct-sum sign of the value at the least
/// integer where the function part is nontrivial, falling back to the sign of
/// tExp when the function part is trivial. Zero iff the element is trivial.
/// Throws UnsupportedError when the family is not orderable.
OrderSign sign_l1(const Level1Element& e, const Family& fam);

/// Left-order sign on H = <s, F>, one level up: sign_l1 of the value at the
/// least integer where the function part is nontrivial, else the sign of
/// sExp. This is the classical lexicographic order on a wreath product with
/// supports bounded below, so it is a genuine left-invariant total order.
OrderSign sign_l2(const Level2Element& e, const Family& fam);

/// sign_l2 of a^-1 * b: positive means a precedes b.
OrderSign compare_l2(const Level2Element& a, const Level2Element& b, const Family& fam);

}  // namespace wreathlab
