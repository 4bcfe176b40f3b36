#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wreathlab/family.hpp"
#include "wreathlab/level1.hpp"
#include "wreathlab/word.hpp"

namespace wreathlab {

/// One conjugated factor (F^(s^shift))^sign of the second-level extension.
struct Level2Factor {
  long long shift = 0;
  int sign = +1;

  friend bool operator==(const Level2Factor&, const Level2Factor&) = default;
};

/// An element of H = <s, F>, kept in the collected form
///   (F^(s^g1))^e1 ... (F^(s^gN))^eN * s^sExp
/// with adjacent exact-inverse factors cancelled eagerly. As at level 1 this
/// is a word-level normal form only; use l2_equal / l2_key for element
/// identity.
struct Level2Element {
  std::vector<Level2Factor> factors;
  long long s_exp = 0;

  friend bool operator==(const Level2Element&, const Level2Element&) = default;
};

Level2Element l2_identity();
Level2Element l2_s(long long exp);
Level2Element l2_F(int sign);

Level2Element l2_mul(const Level2Element& a, const Level2Element& b);
Level2Element l2_inv(const Level2Element& e);
void l2_push(Level2Element& e, Level2Factor f);

/// Collects a word over {s, F} (gen 1 = s, gen 2 = F) by the rewriting
/// s^a F = (F^(s^a)) s^a: scanning left to right with running s-exponent a,
/// each F^e letter becomes a factor (a, e).
Level2Element l2_collect(const Word& sf_word);

/// Inverse of collection: s^g1 F^e1 s^(g2-g1) F^e2 ... F^eN s^(sExp-gN),
/// freely reduced by construction.
Word letter_expansion(const Level2Element& e);

/// Psi of global generator i: [F, F^(s^(2^i - 1))], collected to factors
/// [(0,+1), (2^i-1,+1), (0,-1), (2^i-1,-1)], sExp 0. Validates existence and
/// guards the 2^i shift against overflow.
Level2Element Psi_gen(const Family& fam, int global_gen);

/// Image of a local word of G_l under the generator-wise Psi product.
/// group_index 0 reads the word over the global generators of the whole
/// direct sum instead of one group's local generators.
Level2Element embed(const Family& fam, int group_index, const Word& local_word);

/// Freely reduced {s, F} word of the embedded image: the concatenation of the
/// per-letter expansions of Psi. Its length is at most 2^(M_l + 2) per letter,
/// which is the Lipschitz upper bound the distortion audit certifies.
Word embed_word(const Family& fam, int group_index, const Word& local_word);

/// Value of the function coordinate at s^k: the product, in factor order, of
/// offset_value(k + shift_i)^(sign_i). Conjugation by s^g shifts evaluation:
/// (F^(s^g))(s^k) = F(s^(k+g)).
Level1Element eval_l2(const Level2Element& e, long long k, const Family& fam);

/// All k where the value function could be nontrivial, sorted ascending.
/// See l2_is_trivial in level2.cpp for the completeness argument.
std::vector<long long> l2_support_points(const Level2Element& e, const Family& fam);

/// True iff e is the identity: sExp 0 and the value at every support point is
/// level-1 trivial. Total for finite and enumerated families alike.
bool l2_is_trivial(const Level2Element& e, const Family& fam);

bool l2_equal(const Level2Element& a, const Level2Element& b, const Family& fam);

/// Canonical key: sExp plus the nontrivial support-point values by their
/// level-1 keys. Equal keys iff equal elements.
std::string l2_key(const Level2Element& e, const Family& fam);

/// {"factors": [[shift, sign], ...], "sExp": n}
nlohmann::json l2_to_json(const Level2Element& e);
Level2Element l2_from_json(const nlohmann::json& doc);

}  // namespace wreathlab
