#include "wreathlab/magnus.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace wreathlab {

namespace {

using Monomial = std::vector<int>;  // sequence of variable indices; noncommuting

struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Series = std::map<Monomial, long long, GradedLex>;

}  // namespace

OrderSign magnus_sign(const Word& word, int max_degree) {
  Series acc;
  acc[{}] = 1;
  for (const Letter& l : word) {
    // x_i -> 1 + X_i; x_i^-1 -> 1 - X_i + X_i^2 - ... up to the truncation.
    Series next;
    for (const auto& [mono, coeff] : acc) {
      const int room = max_degree - static_cast<int>(mono.size());
      const int top = l.sign > 0 ? std::min(room, 1) : room;
      Monomial m2 = mono;
      for (int r = 0; r <= top; ++r) {
        const long long c = (l.sign > 0 || r % 2 == 0) ? 1 : -1;
        if (auto [it, fresh] = next.try_emplace(m2, coeff * c); !fresh) it->second += coeff * c;
        m2.push_back(l.gen);
      }
    }
    acc = std::move(next);
  }
  acc[{}] -= 1;
  for (const auto& [mono, coeff] : acc)
    if (coeff != 0) return sign_of(coeff);
  return OrderSign::zero;
}

}  // namespace wreathlab
