#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wreathlab/family.hpp"
#include "wreathlab/word.hpp"

namespace wreathlab {

/// One conjugated-generator factor (f_gen)^(t^shift) raised to sign.
struct Level1Factor {
  int gen = 0;  ///< global generator index
  long long shift = 0;
  int sign = +1;

  friend bool operator==(const Level1Factor&, const Level1Factor&) = default;
};

/// An element of the first-level wreath extension, kept in collected form
///   (f_{n_1}^{t^{m_1}})^{e_1} ... (f_{n_N}^{t^{m_N}})^{e_N} * t^tExp.
/// Adjacent factors that are exact inverses (same gen and shift, opposite
/// sign) are cancelled eagerly, cascading like free reduction. The form is a
/// word-level normal form, not a canonical one: distinct factor sequences can
/// still name equal elements (compare with l1_equal or l1_key).
struct Level1Element {
  std::vector<Level1Factor> factors;
  long long t_exp = 0;

  friend bool operator==(const Level1Element&, const Level1Element&) = default;
};

Level1Element l1_identity();
Level1Element l1_t(long long exp);
Level1Element l1_f(int global_gen);  ///< single factor, shift 0, sign +1

Level1Element l1_mul(const Level1Element& a, const Level1Element& b);
Level1Element l1_inv(const Level1Element& e);

/// Appends one factor with eager cancellation against the current tail.
void l1_push(Level1Element& e, Level1Factor f);

/// psi of global generator i: the commutator [t, f_i], collected to
/// factors [(i, 1, +1), (i, 0, -1)], tExp 0. Validates that i exists.
Level1Element psi_gen(const Family& fam, int global_gen);

/// psi image of a whole local word of group G_l.
Level1Element psi_word(const Family& fam, int group_index, const Word& local_word);

/// The value of the distinguished level-2 generator's function coordinate at
/// offset delta: t when delta = 1, f_j when delta = 2^j for an existing global
/// generator j >= 1, identity otherwise.
Level1Element offset_value(long long delta, const Family& fam);

/// Value of the function part at t^m: the word, over global generators,
/// obtained from the factors whose support has reached m (those with
/// m + shift >= 1), in factor order.
Word eval_l1(const Level1Element& e, long long m);

/// [min_j(1 - m_j), max_j(1 - m_j)]: outside, the value word is empty below
/// and constant above. Requires at least one factor.
std::pair<long long, long long> l1_window(const Level1Element& e);

/// True iff e is the identity: tExp 0 and every window value trivial.
bool l1_is_trivial(const Level1Element& e, const Family& fam);

bool l1_equal(const Level1Element& a, const Level1Element& b, const Family& fam);

/// Canonical key: equal keys iff equal elements. Encodes tExp plus the value
/// function by its explicit window values and the constant it keeps above the
/// window, trimmed so equal elements with different windows agree.
std::string l1_key(const Level1Element& e, const Family& fam);

}  // namespace wreathlab
