#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wreathlab/errors.hpp"
#include "wreathlab/family.hpp"
#include "wreathlab/group.hpp"

namespace wreathlab {

/// A computable left order bound to a group or to a family's direct sum.
/// alphabet is the number of signed generators cone enumeration may use;
/// -1 marks an unbounded alphabet (enumerated family), which supports sign
/// queries but not cone enumeration.
struct OrderDescriptor {
  std::string name;
  int alphabet = 0;
  std::function<OrderSign(const Word&)> sign;
  std::function<bool(const Word&)> trivial;
  std::function<std::string(const Word&)> key;
};

/// Throws UnsupportedError if the group has no order decider.
OrderDescriptor order_of(const GroupDescriptor& g);

/// Lexicographic order on the direct sum; for finite families every group
/// must be orderable.
OrderDescriptor order_of(const Family& fam);

/// sign(a^-1 b); positive means a precedes b.
OrderSign compare(const OrderDescriptor& o, const Word& a, const Word& b);

/// First `cap` positive elements in shortlex order, one canonical word each.
std::vector<Word> positive_cone_enum(const OrderDescriptor& o, long long cap,
                                     long long node_budget = 4'000'000,
                                     const CancelToken* cancel = nullptr);

}  // namespace wreathlab
