#include "wreathlab/level2.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "wreathlab/errors.hpp"

namespace wreathlab {

namespace {

// Shifts and s-exponents are capped below 2^62 so that every support point
// 2^a - shift (a <= 62) and every evaluation offset k + shift stays inside
// signed 64-bit range; the few places that can still leave it go through
// __int128 and fail loudly instead of wrapping.
constexpr long long max_shift = (1LL << 62) - 1;

void check_shift(long long v, const char* what) {
  if (v > max_shift || v < -max_shift)
    throw InputError(std::string(what) + " out of range, magnitude must be below 2^62");
}

constexpr long long max_expansion_letters = 8'000'000;

void append_s_run(Word& w, long long delta) {
  const int sign = delta >= 0 ? +1 : -1;
  for (unsigned long long i = delta >= 0 ? static_cast<unsigned long long>(delta)
                                         : -static_cast<unsigned long long>(delta);
       i > 0; --i)
    w.push_back({1, sign});
}

}  // namespace

Level2Element l2_identity() { return {}; }

Level2Element l2_s(long long exp) {
  check_shift(exp, "s exponent");
  Level2Element e;
  e.s_exp = exp;
  return e;
}

Level2Element l2_F(int sign) {
  if (sign != 1 && sign != -1) throw InputError("F sign must be +1 or -1");
  Level2Element e;
  e.factors.push_back({0, sign});
  return e;
}

void l2_push(Level2Element& e, Level2Factor f) {
  check_shift(f.shift, "factor shift");
  if (!e.factors.empty()) {
    const Level2Factor& top = e.factors.back();
    if (top.shift == f.shift && top.sign == -f.sign) {
      e.factors.pop_back();
      return;
    }
  }
  e.factors.push_back(f);
}

Level2Element l2_mul(const Level2Element& a, const Level2Element& b) {
  Level2Element out = a;
  for (const Level2Factor& f : b.factors) l2_push(out, {f.shift + a.s_exp, f.sign});
  out.s_exp = a.s_exp + b.s_exp;
  check_shift(out.s_exp, "s exponent");
  return out;
}

Level2Element l2_inv(const Level2Element& e) {
  // The reversed, negated factor list of a normalized element is itself free
  // of adjacent exact inverses, so pushes never cancel here.
  Level2Element out;
  out.factors.reserve(e.factors.size());
  for (auto it = e.factors.rbegin(); it != e.factors.rend(); ++it)
    l2_push(out, {it->shift - e.s_exp, -it->sign});
  out.s_exp = -e.s_exp;
  return out;
}

Level2Element l2_collect(const Word& sf_word) {
  Level2Element out;
  long long alpha = 0;
  for (const Letter& l : sf_word) {
    if (l.gen == 1) {
      alpha += l.sign;
    } else if (l.gen == 2) {
      l2_push(out, {alpha, l.sign});
    } else {
      throw InputError("words over {s, F} use generator index 1 for s and 2 for F");
    }
  }
  out.s_exp = alpha;
  return out;
}

Word letter_expansion(const Level2Element& e) {
  unsigned long long total = e.factors.size();
  long long prev = 0;
  auto add_run = [&total](long long delta) {
    const unsigned long long mag = delta >= 0 ? static_cast<unsigned long long>(delta)
                                              : -static_cast<unsigned long long>(delta);
    total += mag;
    if (total > static_cast<unsigned long long>(max_expansion_letters))
      throw BudgetExceeded("letter expansion exceeds the materialization limit");
  };
  for (const Level2Factor& f : e.factors) {
    add_run(f.shift - prev);
    prev = f.shift;
  }
  add_run(e.s_exp - prev);

  Word w;
  w.reserve(total);
  prev = 0;
  for (const Level2Factor& f : e.factors) {
    append_s_run(w, f.shift - prev);
    w.push_back({2, f.sign});
    prev = f.shift;
  }
  append_s_run(w, e.s_exp - prev);
  return free_reduce(w);
}

Level2Element Psi_gen(const Family& fam, int global_gen) {
  if (global_gen < 1) throw InputError("global generator index must be >= 1");
  if (!fam.global_exists(global_gen))
    throw InputError("global generator x" + std::to_string(global_gen) +
                     " does not exist in this family");
  if (global_gen > 62)
    throw UnsupportedError("generator index above 62 needs a shift of 2^63 or more, "
                           "beyond 64-bit arithmetic");
  const long long d = (1LL << global_gen) - 1;
  Level2Element e;
  e.factors = {{0, +1}, {d, +1}, {0, -1}, {d, -1}};
  return e;
}

namespace {

// group_index >= 1 reads the word over that group's local generators;
// group_index 0 reads it over the global generators of the whole direct sum.
int to_global(const Family& fam, int group_index, int gen) {
  if (group_index == 0) return gen;
  return fam.global_index(group_index, gen);
}

void check_embed_word(const Family& fam, int group_index, const Word& w) {
  if (group_index == 0) {
    for (const Letter& l : w)
      if (l.gen < 1 || !fam.global_exists(l.gen))
        throw InputError("global generator x" + std::to_string(l.gen) +
                         " does not exist in this family");
  } else {
    check_word(fam.group(group_index), w);
  }
}

}  // namespace

Level2Element embed(const Family& fam, int group_index, const Word& local_word) {
  check_embed_word(fam, group_index, local_word);
  Level2Element out;
  for (const Letter& l : local_word) {
    Level2Element img = Psi_gen(fam, to_global(fam, group_index, l.gen));
    out = l2_mul(out, l.sign > 0 ? img : l2_inv(img));
  }
  return out;
}

Word embed_word(const Family& fam, int group_index, const Word& local_word) {
  check_embed_word(fam, group_index, local_word);
  Word out;
  for (const Letter& l : local_word) {
    Level2Element img = Psi_gen(fam, to_global(fam, group_index, l.gen));
    if (l.sign < 0) img = l2_inv(img);
    const Word piece = letter_expansion(img);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(out);
}

Level1Element eval_l2(const Level2Element& e, long long k, const Family& fam) {
  Level1Element out;
  for (const Level2Factor& f : e.factors) {
    const __int128 off = static_cast<__int128>(k) + f.shift;
    if (off < 1) continue;
    if (off > (static_cast<__int128>(1) << 62)) {
      // Powers of two beyond 2^62 would name generators whose shifts we
      // cannot represent; anything else is an identity offset.
      if ((off & (off - 1)) == 0) {
        int a = 0;
        for (__int128 v = off; v > 1; v >>= 1) ++a;
        if (fam.global_exists(a))
          throw UnsupportedError("evaluation offset 2^63 or beyond names a live generator, "
                                 "outside 64-bit arithmetic");
      }
      continue;
    }
    const Level1Element v = offset_value(static_cast<long long>(off), fam);
    out = l1_mul(out, f.sign > 0 ? v : l1_inv(v));
  }
  return out;
}

// Support-point completeness.
//
// The value of e at s^k multiplies, over factors (gamma_i, eps_i), the
// offset values at k + gamma_i, and an offset contributes only when it is 1
// (giving t) or 2^j for an existing generator j >= 1 (giving f_j). So the
// value can be nontrivial only at points k = 2^a - gamma for a shift gamma
// of e and some a >= 0.
//
// Finite family, n global generators: offsets 2^a with a > n give the
// identity, so the points {2^a - gamma : 0 <= a <= n} are all of them.
//
// Enumerated family: a is unbounded, but beyond a collision bound A only one
// shift class can be active at 2^a - gamma. Two classes gamma < gamma' are
// both on power slots at the same point iff 2^b - 2^a = gamma' - gamma = d,
// and that equation has at most one solution a < b: a must be the 2-adic
// valuation of d, and then d / 2^a + 1 must itself be a power of two. Taking
// A = the largest exponent over all pairwise solutions (at least 0), every
// point 2^a - gamma with a > A has value f_a ^ c(gamma), where c(gamma) is
// the signed factor count of class gamma. The point 1 - gamma (a = 0, always
// included) has t-exponent exactly c(gamma), since no other class can land
// on offset 1 there; so if every listed point checks trivial then every
// class sum is zero and the beyond-window values f_a ^ 0 are trivial too.
// The listed points therefore decide triviality outright, for finite and
// enumerated families alike, and no torsion metadata is ever consulted.
//
// Exponents are clamped at 62; a live offset of 2^63 or more surfaces as
// UnsupportedError from eval_l2 rather than a silent wrap.
std::vector<long long> l2_support_points(const Level2Element& e, const Family& fam) {
  std::set<long long> shifts;
  for (const Level2Factor& f : e.factors) shifts.insert(f.shift);
  if (shifts.empty()) return {};

  int a_max = 0;
  if (fam.is_finite()) {
    a_max = std::min(fam.global_generator_count(), 62);
  } else {
    for (auto it = shifts.begin(); it != shifts.end(); ++it) {
      for (auto jt = std::next(it); jt != shifts.end(); ++jt) {
        const unsigned long long d = static_cast<unsigned long long>(*jt - *it);
        int a = 0;
        while (((d >> a) & 1ULL) == 0) ++a;
        const unsigned long long q1 = (d >> a) + 1;
        if ((q1 & (q1 - 1)) != 0) continue;
        int r = 0;
        while ((q1 >> r) != 1) ++r;
        a_max = std::max(a_max, std::min(a + r, 62));
      }
    }
  }

  std::set<long long> points;
  for (long long gamma : shifts)
    for (int a = 0; a <= a_max; ++a)
      points.insert(static_cast<long long>((static_cast<__int128>(1) << a) - gamma));
  return {points.begin(), points.end()};
}

bool l2_is_trivial(const Level2Element& e, const Family& fam) {
  if (e.s_exp != 0) return false;
  for (long long k : l2_support_points(e, fam))
    if (!l1_is_trivial(eval_l2(e, k, fam), fam)) return false;
  return true;
}

bool l2_equal(const Level2Element& a, const Level2Element& b, const Family& fam) {
  return l2_is_trivial(l2_mul(a, l2_inv(b)), fam);
}

std::string l2_key(const Level2Element& e, const Family& fam) {
  // Complete by the support-point argument above: the nontrivial points of
  // the value function are listed in full, so equal elements get equal keys
  // no matter how their factor lists differ.
  std::string out = "s" + std::to_string(e.s_exp);
  for (long long k : l2_support_points(e, fam)) {
    const Level1Element v = eval_l2(e, k, fam);
    if (l1_is_trivial(v, fam)) continue;
    out += "|";
    out += std::to_string(k);
    out += ":";
    out += l1_key(v, fam);
  }
  return out;
}

nlohmann::json l2_to_json(const Level2Element& e) {
  nlohmann::json factors = nlohmann::json::array();
  for (const Level2Factor& f : e.factors) factors.push_back({f.shift, f.sign});
  return {{"factors", std::move(factors)}, {"sExp", e.s_exp}};
}

namespace {

long long bounded_int_field(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer())
    throw InputError(std::string(what) + " must be an integer");
  if (v.is_number_unsigned() &&
      v.get<unsigned long long>() > static_cast<unsigned long long>(max_shift))
    throw InputError(std::string(what) + " out of range, magnitude must be below 2^62");
  const long long out = v.get<long long>();
  check_shift(out, what);
  return out;
}

}  // namespace

Level2Element l2_from_json(const nlohmann::json& doc) {
  if (!doc.is_object())
    throw InputError("level-2 element must be {\"factors\": [[shift, sign], ...], \"sExp\": n}");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "factors" && it.key() != "sExp")
      throw InputError("unknown key \"" + it.key() + "\" in level-2 element");
  if (!doc.contains("factors") || !doc.contains("sExp"))
    throw InputError("level-2 element needs both \"factors\" and \"sExp\"");
  const nlohmann::json& factors = doc["factors"];
  if (!factors.is_array()) throw InputError("\"factors\" must be an array of [shift, sign] pairs");

  Level2Element out;
  for (const nlohmann::json& f : factors) {
    if (!f.is_array() || f.size() != 2)
      throw InputError("each factor must be a [shift, sign] pair");
    const long long shift = bounded_int_field(f[0], "factor shift");
    if (!f[1].is_number_integer()) throw InputError("factor sign must be an integer");
    const long long sign = f[1].get<long long>();
    if (sign != 1 && sign != -1) throw InputError("factor sign must be 1 or -1");
    l2_push(out, {shift, static_cast<int>(sign)});
  }
  out.s_exp = bounded_int_field(doc["sExp"], "sExp");
  return out;
}

}  // namespace wreathlab
