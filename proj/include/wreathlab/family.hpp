#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wreathlab/group.hpp"

namespace wreathlab {

/// How an infinite family answers torsion questions about its generators.
/// Finite families never need this; see level2.cpp for why the triviality
/// decider ends up not consulting it either.
enum class TorsionPolicy { finite_family, torsion_free_generators, generator_order_oracle };

/// "Is x_j^power trivial for every global generator index j > beyond?"
/// nullopt means the oracle cannot answer uniformly.
using TailOracle = std::function<std::optional<bool>(long long power, long long beyond)>;

/// An ordered family of groups G_1, G_2, ... with the global generator
/// numbering obtained by concatenation: x_1..x_{k1} are G_1's generators,
/// the next k2 are G_2's, and so on. Cheap to copy; resolution over an
/// enumerated family is memoized behind a lock, so const use is thread-safe.
class Family {
 public:
  static Family finite(std::vector<GroupDescriptor> groups);
  static Family enumerated(std::function<GroupDescriptor(int)> enumerator, TorsionPolicy policy,
                           TailOracle oracle = {}, std::string label = "enumerated");

  bool is_finite() const;
  int group_count() const;             ///< finite families only
  int global_generator_count() const;  ///< finite families only

  const GroupDescriptor& group(int index) const;  ///< 1-based
  int global_index(int group_index, int local_index) const;
  std::pair<int, int> resolve(int global_index) const;  ///< -> (group, local)
  bool global_exists(int global_index) const;
  int max_global_index(int group_index) const;  ///< largest global index in G_l

  TorsionPolicy torsion_policy() const;
  const TailOracle& tail_oracle() const;

  std::string signature() const;
  std::string digest() const;  ///< stable hex digest of the signature

 private:
  struct Impl;
  explicit Family(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

/// Splits a word over global generators into per-group local words, keeping
/// the within-group letter order. Keys are 1-based group indices.
std::map<int, Word> project_components(const Family& fam, const Word& global_word);

/// Word problem for the direct sum: trivial iff every component is.
bool direct_sum_trivial(const Family& fam, const Word& global_word);

/// Lexicographic left order on the direct sum: the lowest-indexed nontrivial
/// component decides. For finite families every group must be orderable; for
/// enumerated families every group owning a letter of the word must be.
OrderSign direct_sum_sign(const Family& fam, const Word& global_word);

/// Canonical key for the direct-sum element of a global word.
std::string direct_sum_key(const Family& fam, const Word& global_word);

/// GroupDescriptor view of the whole direct sum of a finite family: global
/// generators, the direct-sum word problem, keys, and the lexicographic
/// order when every group is orderable. Relators stay empty.
GroupDescriptor direct_sum_descriptor(const Family& fam);

/// FNV-1a 64-bit hex digest; stable across runs and platforms.
std::string fnv1a_hex(const std::string& data);

}  // namespace wreathlab
