#include "wreathlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "wreathlab/errors.hpp"

namespace wreathlab {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

bool freely_trivial(const Word& w) { return free_reduce(w).empty(); }

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->sign});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

int max_generator(const Word& w) {
  int m = 0;
  for (const Letter& l : w) m = std::max(m, l.gen);
  return m;
}

namespace {

long long parse_exponent(const std::string& token, size_t caret) {
  const std::string exp = token.substr(caret + 1);
  if (exp.empty() || exp == "-" || exp == "+")
    throw InputError("malformed exponent in token '" + token + "'");
  for (size_t i = (exp[0] == '-' || exp[0] == '+') ? 1 : 0; i < exp.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(exp[i])))
      throw InputError("malformed exponent in token '" + token + "'");
  long long e = std::strtoll(exp.c_str(), nullptr, 10);
  if (e == 0) throw InputError("zero exponent in token '" + token + "'");
  if (e > 4096 || e < -4096) throw InputError("exponent out of range in token '" + token + "'");
  return e;
}

void append_power(Word& w, int gen, long long exp) {
  const int sign = exp > 0 ? +1 : -1;
  for (long long i = 0; i < std::llabs(exp); ++i) w.push_back({gen, sign});
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

Word parse_generator_word(const std::string& text) {
  Word out;
  for (const std::string& token : split_tokens(text)) {
    size_t caret = token.find('^');
    const std::string base = token.substr(0, caret);
    if (base.size() < 2 || base[0] != 'x')
      throw InputError("expected generator token like x1 or x2^-1, got '" + token + "'");
    for (size_t i = 1; i < base.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(base[i])))
        throw InputError("expected generator token like x1 or x2^-1, got '" + token + "'");
    int gen = std::atoi(base.c_str() + 1);
    if (gen <= 0) throw InputError("generator index must be positive in '" + token + "'");
    long long exp = (caret == std::string::npos) ? 1 : parse_exponent(token, caret);
    append_power(out, gen, exp);
  }
  return out;
}

namespace {

bool try_parse_sf_tokens(const std::string& text, Word& out) {
  out.clear();
  for (const std::string& token : split_tokens(text)) {
    size_t caret = token.find('^');
    const std::string base = token.substr(0, caret);
    int gen;
    if (base == "s")
      gen = 1;
    else if (base == "F")
      gen = 2;
    else
      return false;
    long long exp = 1;
    if (caret != std::string::npos) {
      try {
        exp = parse_exponent(token, caret);
      } catch (const InputError&) {
        return false;
      }
    }
    append_power(out, gen, exp);
  }
  return true;
}

bool try_parse_sf_compact(const std::string& text, Word& out) {
  out.clear();
  for (char c : text) {
    switch (c) {
      case 's': out.push_back({1, +1}); break;
      case 'S': out.push_back({1, -1}); break;
      case 'f': out.push_back({2, +1}); break;
      case 'F': out.push_back({2, -1}); break;
      default:
        if (std::isspace(static_cast<unsigned char>(c))) return false;
        return false;
    }
  }
  return true;
}

std::string format_with_names(const Word& w, const char* const names[]) {
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long long run = static_cast<long long>(j - i) * w[i].sign;
    if (!out.empty()) out += ' ';
    out += names[w[i].gen - 1];
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace

Word parse_sf_word(const std::string& text) {
  Word out;
  if (try_parse_sf_tokens(text, out)) return out;
  if (try_parse_sf_compact(text, out)) return out;
  throw InputError("cannot parse '" + text +
                   "' as a word over {s, F}; use tokens (\"s F^-1\") or compact letters (sSfF)");
}

std::string format_generator_word(const Word& w) {
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long long run = static_cast<long long>(j - i) * w[i].sign;
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(w[i].gen);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string format_sf_word(const Word& w) {
  static const char* const names[] = {"s", "F"};
  for (const Letter& l : w)
    if (l.gen < 1 || l.gen > 2) throw InputError("not a word over {s, F}");
  return format_with_names(w, names);
}

}  // namespace wreathlab
