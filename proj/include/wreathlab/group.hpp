#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wreathlab/word.hpp"

namespace wreathlab {

enum class OrderSign { negative = -1, zero = 0, positive = 1 };

inline OrderSign opposite(OrderSign s) { return static_cast<OrderSign>(-static_cast<int>(s)); }

inline OrderSign sign_of(long long v) {
  return v < 0 ? OrderSign::negative : (v > 0 ? OrderSign::positive : OrderSign::zero);
}

const char* to_string(OrderSign s);
OrderSign order_sign_from_string(const std::string& s);

/// A finitely generated group with a total word-problem decider. The order
/// decider, when present, is a total left-order sign: zero exactly on words
/// representing the identity. element_key maps words to a canonical string,
/// equal keys iff equal elements; every zoo group provides one.
struct GroupDescriptor {
  std::string name;
  std::string signature;  ///< stable id, used in family digests
  int generator_count = 0;
  std::function<bool(const Word&)> trivial;
  std::function<OrderSign(const Word&)> order;
  std::function<std::string(const Word&)> element_key;
  std::vector<Word> relators;

  bool orderable() const { return static_cast<bool>(order); }
};

/// Throws InputError if w uses a generator index outside [1, generator_count].
void check_word(const GroupDescriptor& g, const Word& w);

/// Word problem: true iff w represents the identity. Validates indices.
bool wp(const GroupDescriptor& g, const Word& w);

/// Left-order sign of the element of w. Throws UnsupportedError if g has no
/// order decider. Validates indices.
OrderSign sign_base(const GroupDescriptor& g, const Word& w);

GroupDescriptor make_integers();
GroupDescriptor make_free_abelian(int rank);     // rank >= 0; lex order, x1 dominant
GroupDescriptor make_free_group(int rank);       // rank >= 1; Magnus-series order
GroupDescriptor make_klein_bottle();             // <a, b | a b a^-1 = b^-1>, x1 = a, x2 = b
GroupDescriptor make_cyclic(long long modulus);  // modulus >= 1; no order
GroupDescriptor make_symmetric(int degree);      // degree >= 2; gens = adjacent transpositions

/// Dispatch by config name: "Z", "Z^n", "F_k", "Klein", "Z/m", "S_n".
/// param carries n / k / m and must be present exactly when the name needs it.
GroupDescriptor make_zoo_group(const std::string& name, std::optional<long long> param = {});

}  // namespace wreathlab
