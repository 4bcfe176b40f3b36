#include "wreathlab/level1.hpp"

#include <algorithm>
#include <bit>

#include "wreathlab/errors.hpp"

namespace wreathlab {

Level1Element l1_identity() { return {}; }

Level1Element l1_t(long long exp) {
  Level1Element e;
  e.t_exp = exp;
  return e;
}

Level1Element l1_f(int global_gen) {
  Level1Element e;
  e.factors.push_back({global_gen, 0, +1});
  return e;
}

void l1_push(Level1Element& e, Level1Factor f) {
  if (!e.factors.empty()) {
    const Level1Factor& top = e.factors.back();
    if (top.gen == f.gen && top.shift == f.shift && top.sign == -f.sign) {
      e.factors.pop_back();
      return;
    }
  }
  e.factors.push_back(f);
}

Level1Element l1_mul(const Level1Element& a, const Level1Element& b) {
  // t^a conjugates b's factors: shifts move by a's exponent, exponents add.
  Level1Element out = a;
  for (const Level1Factor& f : b.factors) l1_push(out, {f.gen, f.shift + a.t_exp, f.sign});
  out.t_exp = a.t_exp + b.t_exp;
  return out;
}

Level1Element l1_inv(const Level1Element& e) {
  Level1Element out;
  out.t_exp = -e.t_exp;
  out.factors.reserve(e.factors.size());
  for (auto it = e.factors.rbegin(); it != e.factors.rend(); ++it)
    out.factors.push_back({it->gen, it->shift - e.t_exp, -it->sign});
  return out;
}

Level1Element psi_gen(const Family& fam, int global_gen) {
  if (!fam.global_exists(global_gen))
    throw InputError("global generator index " + std::to_string(global_gen) + " does not exist");
  Level1Element e;
  e.factors.push_back({global_gen, 1, +1});
  e.factors.push_back({global_gen, 0, -1});
  return e;
}

Level1Element psi_word(const Family& fam, int group_index, const Word& local_word) {
  const GroupDescriptor& g = fam.group(group_index);
  check_word(g, local_word);
  Level1Element out;
  for (const Letter& l : local_word) {
    Level1Element gen = psi_gen(fam, fam.global_index(group_index, l.gen));
    out = l1_mul(out, l.sign > 0 ? gen : l1_inv(gen));
  }
  return out;
}

Level1Element offset_value(long long delta, const Family& fam) {
  if (delta == 1) return l1_t(1);
  if (delta >= 2 && std::has_single_bit(static_cast<unsigned long long>(delta))) {
    int j = std::bit_width(static_cast<unsigned long long>(delta)) - 1;
    if (fam.global_exists(j)) return l1_f(j);
  }
  return l1_identity();
}

Word eval_l1(const Level1Element& e, long long m) {
  Word out;
  for (const Level1Factor& f : e.factors)
    if (m + f.shift >= 1) out.push_back({f.gen, f.sign});
  return out;
}

std::pair<long long, long long> l1_window(const Level1Element& e) {
  if (e.factors.empty()) throw InputError("l1_window needs at least one factor");
  long long lo = 1 - e.factors.front().shift, hi = lo;
  for (const Level1Factor& f : e.factors) {
    lo = std::min(lo, 1 - f.shift);
    hi = std::max(hi, 1 - f.shift);
  }
  return {lo, hi};
}

bool l1_is_trivial(const Level1Element& e, const Family& fam) {
  if (e.t_exp != 0) return false;
  if (e.factors.empty()) return true;
  // Below the window no factor has arrived (empty value); at and above its
  // top every factor contributes, so the value is constant there.
  auto [lo, hi] = l1_window(e);
  for (long long m = lo; m <= hi; ++m)
    if (!direct_sum_trivial(fam, eval_l1(e, m))) return false;
  return true;
}

bool l1_equal(const Level1Element& a, const Level1Element& b, const Family& fam) {
  return l1_is_trivial(l1_mul(a, l1_inv(b)), fam);
}

std::string l1_key(const Level1Element& e, const Family& fam) {
  const std::string head = "t" + std::to_string(e.t_exp) + "|";
  if (e.factors.empty()) return head;
  auto [lo, hi] = l1_window(e);
  std::vector<std::string> keys;
  keys.reserve(static_cast<size_t>(hi - lo + 1));
  for (long long m = lo; m <= hi; ++m) keys.push_back(direct_sum_key(fam, eval_l1(e, m)));
  const std::string identity_key = direct_sum_key(fam, Word{});
  // Fold the constant tail down and trim identity values off the bottom, so
  // the encoding depends only on the value function, not on this element's
  // particular window.
  long long top = hi;
  while (top > lo && keys[static_cast<size_t>(top - 1 - lo)] == keys[static_cast<size_t>(top - lo)])
    --top;
  long long bot = lo;
  while (bot < top && keys[static_cast<size_t>(bot - lo)] == identity_key) ++bot;
  if (bot == top && keys[static_cast<size_t>(top - lo)] == identity_key) return head;
  std::string out = head + "c@" + std::to_string(top) + ":" + keys[static_cast<size_t>(top - lo)];
  for (long long m = bot; m < top; ++m)
    out += "|" + std::to_string(m) + ":" + keys[static_cast<size_t>(m - lo)];
  return out;
}

}  // namespace wreathlab
