#include "wreathlab/ball.hpp"

#include "wreathlab/canonical_enum.hpp"

namespace wreathlab {

BallResult ball(const GroupDescriptor& g, int radius, long long node_budget,
                const CancelToken* cancel) {
  if (radius < 0) throw InputError("ball radius must be nonnegative");
  if (!g.element_key) throw InputError(g.name + " has no canonical element key");
  BallResult out;
  EnumStatus status = canonical_words<Word>(
      g.generator_count, Word{},
      [](const Word& w, Letter l) {
        Word c = w;
        c.push_back(l);
        return c;
      },
      [&g](const Word& w) { return g.element_key(w); },
      [&](const Word& w, const Word&) {
        if (static_cast<int>(w.size()) > radius) return false;
        out.words.push_back(w);
        return true;
      },
      node_budget, cancel);
  out.capped = (status == EnumStatus::budget_exhausted);
  return out;
}

}  // namespace wreathlab
