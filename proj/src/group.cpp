#include "wreathlab/group.hpp"

#include <algorithm>
#include <numeric>

#include "wreathlab/errors.hpp"
#include "wreathlab/magnus.hpp"

namespace wreathlab {

const char* to_string(OrderSign s) {
  switch (s) {
    case OrderSign::negative: return "negative";
    case OrderSign::zero: return "zero";
    case OrderSign::positive: return "positive";
  }
  return "?";
}

OrderSign order_sign_from_string(const std::string& s) {
  if (s == "negative") return OrderSign::negative;
  if (s == "zero") return OrderSign::zero;
  if (s == "positive") return OrderSign::positive;
  throw InputError("unknown order sign '" + s + "'");
}

void check_word(const GroupDescriptor& g, const Word& w) {
  for (const Letter& l : w) {
    if (l.gen < 1 || l.gen > g.generator_count)
      throw InputError("generator index " + std::to_string(l.gen) + " out of range for " + g.name +
                       " (" + std::to_string(g.generator_count) + " generators)");
    if (l.sign != 1 && l.sign != -1) throw InputError("letter sign must be +1 or -1");
  }
}

bool wp(const GroupDescriptor& g, const Word& w) {
  check_word(g, w);
  return g.trivial(w);
}

OrderSign sign_base(const GroupDescriptor& g, const Word& w) {
  check_word(g, w);
  if (!g.orderable()) throw UnsupportedError(g.name + " has no order decider");
  return g.order(w);
}

namespace {

std::vector<long long> exponent_sums(const Word& w, int rank) {
  std::vector<long long> sums(static_cast<size_t>(rank), 0);
  for (const Letter& l : w) sums[static_cast<size_t>(l.gen - 1)] += l.sign;
  return sums;
}

std::string join_ll(const std::vector<long long>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

Word commutator(int i, int j) {
  return {{i, +1}, {j, +1}, {i, -1}, {j, -1}};
}

// Klein bottle normal form b^m a^n. Appending a^e bumps n; appending b^e bumps
// m by e or -e depending on the parity of n, since a^n b a^-n = b^(+-1).
std::pair<long long, long long> klein_normal_form(const Word& w) {
  long long m = 0, n = 0;
  for (const Letter& l : w) {
    if (l.gen == 1)
      n += l.sign;
    else
      m += (n % 2 == 0) ? l.sign : -l.sign;
  }
  return {m, n};
}

std::vector<int> permutation_of(const Word& w, int degree) {
  std::vector<int> p(static_cast<size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  for (const Letter& l : w) std::swap(p[static_cast<size_t>(l.gen - 1)], p[static_cast<size_t>(l.gen)]);
  return p;
}

std::string join_int(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

GroupDescriptor make_integers() {
  GroupDescriptor g;
  g.name = "Z";
  g.signature = "Z";
  g.generator_count = 1;
  auto sum = [](const Word& w) {
    long long s = 0;
    for (const Letter& l : w) s += l.sign;
    return s;
  };
  g.trivial = [sum](const Word& w) { return sum(w) == 0; };
  g.order = [sum](const Word& w) { return sign_of(sum(w)); };
  g.element_key = [sum](const Word& w) { return std::to_string(sum(w)); };
  return g;
}

GroupDescriptor make_free_abelian(int rank) {
  if (rank < 0) throw InputError("Z^n needs n >= 0");
  GroupDescriptor g;
  g.name = "Z^" + std::to_string(rank);
  g.signature = "Z^n:" + std::to_string(rank);
  g.generator_count = rank;
  g.trivial = [rank](const Word& w) {
    auto sums = exponent_sums(w, rank);
    return std::all_of(sums.begin(), sums.end(), [](long long s) { return s == 0; });
  };
  // Lexicographic order, first coordinate dominant. Rank 0 is the trivial
  // group; its order is the empty one, sign zero always.
  g.order = [rank](const Word& w) {
    for (long long s : exponent_sums(w, rank))
      if (s != 0) return sign_of(s);
    return OrderSign::zero;
  };
  g.element_key = [rank](const Word& w) { return join_ll(exponent_sums(w, rank)); };
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) g.relators.push_back(commutator(i, j));
  return g;
}

GroupDescriptor make_free_group(int rank) {
  if (rank < 1) throw InputError("F_k needs k >= 1");
  GroupDescriptor g;
  g.name = "F_" + std::to_string(rank);
  g.signature = "F_k:" + std::to_string(rank);
  g.generator_count = rank;
  g.trivial = [](const Word& w) { return freely_trivial(w); };
  g.order = [](const Word& w) {
    Word r = free_reduce(w);
    if (r.empty()) return OrderSign::zero;
    return magnus_sign(r, static_cast<int>(r.size()));
  };
  g.element_key = [](const Word& w) {
    Word r = free_reduce(w);
    std::string out;
    for (const Letter& l : r) {
      if (!out.empty()) out += ',';
      out += std::to_string(l.gen * l.sign);
    }
    return out;
  };
  return g;
}

GroupDescriptor make_klein_bottle() {
  GroupDescriptor g;
  g.name = "Klein";
  g.signature = "Klein";
  g.generator_count = 2;
  g.trivial = [](const Word& w) {
    auto [m, n] = klein_normal_form(w);
    return m == 0 && n == 0;
  };
  // Positive cone: n > 0, or n = 0 and m > 0. Closed under products because
  // the a-exponents add and b-exponents only flip sign under conjugation.
  g.order = [](const Word& w) {
    auto [m, n] = klein_normal_form(w);
    return n != 0 ? sign_of(n) : sign_of(m);
  };
  g.element_key = [](const Word& w) {
    auto [m, n] = klein_normal_form(w);
    return std::to_string(m) + "," + std::to_string(n);
  };
  g.relators.push_back({{1, +1}, {2, +1}, {1, -1}, {2, +1}});  // a b a^-1 b
  return g;
}

GroupDescriptor make_cyclic(long long modulus) {
  if (modulus < 1) throw InputError("Z/m needs m >= 1");
  GroupDescriptor g;
  g.name = "Z/" + std::to_string(modulus);
  g.signature = "Z/m:" + std::to_string(modulus);
  g.generator_count = 1;
  auto residue = [modulus](const Word& w) {
    long long s = 0;
    for (const Letter& l : w) s += l.sign;
    return ((s % modulus) + modulus) % modulus;
  };
  g.trivial = [residue](const Word& w) { return residue(w) == 0; };
  g.element_key = [residue](const Word& w) { return std::to_string(residue(w)); };
  Word power;
  for (long long i = 0; i < modulus; ++i) power.push_back({1, +1});
  g.relators.push_back(power);
  return g;
}

GroupDescriptor make_symmetric(int degree) {
  if (degree < 2) throw InputError("S_n needs n >= 2");
  GroupDescriptor g;
  g.name = "S_" + std::to_string(degree);
  g.signature = "S_n:" + std::to_string(degree);
  g.generator_count = degree - 1;
  g.trivial = [degree](const Word& w) {
    auto p = permutation_of(w, degree);
    for (int i = 0; i < degree; ++i)
      if (p[static_cast<size_t>(i)] != i) return false;
    return true;
  };
  g.element_key = [degree](const Word& w) { return join_int(permutation_of(w, degree)); };
  for (int i = 1; i < degree; ++i) {
    g.relators.push_back({{i, +1}, {i, +1}});
    for (int j = i + 1; j < degree; ++j) {
      Word braid;
      const int reps = (j == i + 1) ? 3 : 2;
      for (int r = 0; r < reps; ++r) {
        braid.push_back({i, +1});
        braid.push_back({j, +1});
      }
      g.relators.push_back(braid);
    }
  }
  return g;
}

GroupDescriptor make_zoo_group(const std::string& name, std::optional<long long> param) {
  auto need = [&](const char* what) {
    if (!param) throw InputError(name + " needs parameter " + what);
    return *param;
  };
  auto no_param = [&]() {
    if (param) throw InputError(name + " takes no parameter");
  };
  if (name == "Z") {
    no_param();
    return make_integers();
  }
  if (name == "Z^n") {
    long long n = need("n");
    if (n < 0 || n > 64) throw InputError("Z^n needs 0 <= n <= 64");
    return make_free_abelian(static_cast<int>(n));
  }
  if (name == "F_k") {
    long long k = need("k");
    if (k < 1 || k > 64) throw InputError("F_k needs 1 <= k <= 64");
    return make_free_group(static_cast<int>(k));
  }
  if (name == "Klein") {
    no_param();
    return make_klein_bottle();
  }
  if (name == "Z/m") return make_cyclic(need("m"));
  if (name == "S_n") {
    long long n = need("n");
    if (n < 2 || n > 32) throw InputError("S_n needs 2 <= n <= 32");
    return make_symmetric(static_cast<int>(n));
  }
  throw InputError("unknown group name '" + name +
                   "'; expected one of Z, Z^n, F_k, Klein, Z/m, S_n");
}

}  // namespace wreathlab
