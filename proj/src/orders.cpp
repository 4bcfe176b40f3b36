#include "wreathlab/orders.hpp"

#include "wreathlab/canonical_enum.hpp"

namespace wreathlab {

OrderDescriptor order_of(const GroupDescriptor& g) {
  if (!g.orderable()) throw UnsupportedError(g.name + " has no order decider");
  OrderDescriptor o;
  o.name = g.name;
  o.alphabet = g.generator_count;
  // Validate indices up front so the descriptor's functions are total on words
  // over its own alphabet and reject anything else.
  o.sign = [g](const Word& w) { return sign_base(g, w); };
  o.trivial = [g](const Word& w) { return wp(g, w); };
  o.key = g.element_key;
  return o;
}

OrderDescriptor order_of(const Family& fam) {
  if (fam.is_finite()) {
    for (int i = 1; i <= fam.group_count(); ++i)
      if (!fam.group(i).orderable())
        throw UnsupportedError("family group " + std::to_string(i) + " (" + fam.group(i).name +
                               ") has no order decider");
  }
  OrderDescriptor o;
  o.name = fam.signature();
  o.alphabet = fam.is_finite() ? fam.global_generator_count() : -1;
  o.sign = [fam](const Word& w) { return direct_sum_sign(fam, w); };
  o.trivial = [fam](const Word& w) { return direct_sum_trivial(fam, w); };
  o.key = [fam](const Word& w) { return direct_sum_key(fam, w); };
  return o;
}

OrderSign compare(const OrderDescriptor& o, const Word& a, const Word& b) {
  return o.sign(concat(inverse(a), b));
}

std::vector<Word> positive_cone_enum(const OrderDescriptor& o, long long cap,
                                     long long node_budget, const CancelToken* cancel) {
  if (o.alphabet < 0)
    throw UnsupportedError("cone enumeration needs a finite generating alphabet");
  if (cap < 0) throw InputError("cone cap must be nonnegative");
  std::vector<Word> out;
  if (cap == 0 || o.alphabet == 0) return out;
  EnumStatus status = canonical_words<Word>(
      o.alphabet, Word{},
      [](const Word& w, Letter l) {
        Word c = w;
        c.push_back(l);
        return c;
      },
      o.key,
      [&](const Word& w, const Word&) {
        if (!w.empty() && o.sign(w) == OrderSign::positive) out.push_back(w);
        return static_cast<long long>(out.size()) < cap;
      },
      node_budget, cancel);
  if (status == EnumStatus::budget_exhausted)
    throw BudgetExceeded("cone enumeration: node budget exhausted after " +
                         std::to_string(out.size()) + " of " + std::to_string(cap) + " elements");
  return out;
}

}  // namespace wreathlab
