#include "wreathlab/family.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <mutex>

#include "wreathlab/errors.hpp"

namespace wreathlab {

// Finite families are immutable after construction. Enumerated families grow a
// memo of resolved groups; all memo access goes through the lock, and groups
// live in a deque so references handed out stay valid while the memo grows.
struct Family::Impl {
  bool finite = true;
  std::deque<GroupDescriptor> groups;
  std::vector<long long> prefix{0};  // prefix[i] = generators in groups 1..i
  std::function<GroupDescriptor(int)> enumerator;
  TorsionPolicy policy = TorsionPolicy::finite_family;
  TailOracle oracle;
  std::string label;
  mutable std::mutex lock;

  void grow_one_locked() {
    GroupDescriptor g;
    try {
      g = enumerator(static_cast<int>(groups.size()) + 1);
    } catch (const std::exception& e) {
      throw InputError(std::string("family enumerator failed: ") + e.what());
    }
    if (g.generator_count < 1)
      throw InputError("groups in an enumerated family need at least one generator");
    prefix.push_back(prefix.back() + g.generator_count);
    groups.push_back(std::move(g));
  }
};

Family Family::finite(std::vector<GroupDescriptor> groups) {
  auto impl = std::make_shared<Impl>();
  impl->finite = true;
  for (auto& g : groups) {
    if (g.generator_count < 0) throw InputError("negative generator count");
    impl->prefix.push_back(impl->prefix.back() + g.generator_count);
    impl->groups.push_back(std::move(g));
  }
  return Family(std::move(impl));
}

Family Family::enumerated(std::function<GroupDescriptor(int)> enumerator, TorsionPolicy policy,
                          TailOracle oracle, std::string label) {
  if (policy == TorsionPolicy::finite_family)
    throw InputError("enumerated families need a torsion policy other than finite_family");
  auto impl = std::make_shared<Impl>();
  impl->finite = false;
  impl->enumerator = std::move(enumerator);
  impl->policy = policy;
  impl->oracle = std::move(oracle);
  impl->label = std::move(label);
  return Family(std::move(impl));
}

bool Family::is_finite() const { return impl_->finite; }

int Family::group_count() const {
  if (!impl_->finite) throw UnsupportedError("group_count over an enumerated family");
  return static_cast<int>(impl_->groups.size());
}

int Family::global_generator_count() const {
  if (!impl_->finite) throw UnsupportedError("global_generator_count over an enumerated family");
  return static_cast<int>(impl_->prefix.back());
}

const GroupDescriptor& Family::group(int index) const {
  if (index < 1) throw InputError("group index must be >= 1");
  if (impl_->finite) {
    if (index > static_cast<int>(impl_->groups.size()))
      throw InputError("group index " + std::to_string(index) + " out of range (family has " +
                       std::to_string(impl_->groups.size()) + " groups)");
    return impl_->groups[static_cast<size_t>(index - 1)];
  }
  std::lock_guard<std::mutex> guard(impl_->lock);
  while (static_cast<int>(impl_->groups.size()) < index) impl_->grow_one_locked();
  return impl_->groups[static_cast<size_t>(index - 1)];
}

int Family::global_index(int group_index, int local_index) const {
  const GroupDescriptor& g = group(group_index);  // extends the memo as needed
  if (local_index < 1 || local_index > g.generator_count)
    throw InputError("local generator index " + std::to_string(local_index) + " out of range for " +
                     g.name);
  if (impl_->finite)
    return static_cast<int>(impl_->prefix[static_cast<size_t>(group_index - 1)]) + local_index;
  std::lock_guard<std::mutex> guard(impl_->lock);
  return static_cast<int>(impl_->prefix[static_cast<size_t>(group_index - 1)]) + local_index;
}

std::pair<int, int> Family::resolve(int global) const {
  if (global < 1) throw InputError("global generator index must be >= 1");
  auto locate = [&]() -> std::pair<int, int> {
    // First prefix sum that reaches the index owns it; zero-generator groups
    // produce equal consecutive sums and are skipped by the lower bound.
    auto it = std::lower_bound(impl_->prefix.begin(), impl_->prefix.end(), global);
    int group_index = static_cast<int>(it - impl_->prefix.begin());
    int local = global - static_cast<int>(impl_->prefix[static_cast<size_t>(group_index - 1)]);
    return {group_index, local};
  };
  if (impl_->finite) {
    if (global > impl_->prefix.back())
      throw InputError("global generator index " + std::to_string(global) +
                       " out of range (family has " + std::to_string(impl_->prefix.back()) +
                       " generators)");
    return locate();
  }
  std::lock_guard<std::mutex> guard(impl_->lock);
  while (impl_->prefix.back() < global) impl_->grow_one_locked();
  return locate();
}

bool Family::global_exists(int global) const {
  if (global < 1) return false;
  if (impl_->finite) return global <= impl_->prefix.back();
  return true;  // enumerated families are total and every group contributes generators
}

int Family::max_global_index(int group_index) const {
  const GroupDescriptor& g = group(group_index);
  if (g.generator_count == 0) return 0;
  return global_index(group_index, g.generator_count);
}

TorsionPolicy Family::torsion_policy() const {
  return impl_->finite ? TorsionPolicy::finite_family : impl_->policy;
}

const TailOracle& Family::tail_oracle() const { return impl_->oracle; }

std::string Family::signature() const {
  if (!impl_->finite) return "fam-enum[" + impl_->label + "]";
  std::string out = "fam[";
  for (size_t i = 0; i < impl_->groups.size(); ++i) {
    if (i) out += ',';
    out += impl_->groups[i].signature;
  }
  return out + "]";
}

std::string fnv1a_hex(const std::string& data) {
  unsigned long long h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return std::string(buf);
}

std::string Family::digest() const { return fnv1a_hex(signature()); }

std::map<int, Word> project_components(const Family& fam, const Word& global_word) {
  std::map<int, Word> parts;
  for (const Letter& l : global_word) {
    if (l.sign != 1 && l.sign != -1) throw InputError("letter sign must be +1 or -1");
    auto [group_index, local] = fam.resolve(l.gen);
    parts[group_index].push_back({local, l.sign});
  }
  return parts;
}

bool direct_sum_trivial(const Family& fam, const Word& global_word) {
  for (const auto& [group_index, local_word] : project_components(fam, global_word))
    if (!fam.group(group_index).trivial(local_word)) return false;
  return true;
}

OrderSign direct_sum_sign(const Family& fam, const Word& global_word) {
  if (fam.is_finite()) {
    for (int i = 1; i <= fam.group_count(); ++i)
      if (!fam.group(i).orderable())
        throw UnsupportedError("family group " + std::to_string(i) + " (" + fam.group(i).name +
                               ") has no order decider");
  }
  for (const auto& [group_index, local_word] : project_components(fam, global_word)) {
    const GroupDescriptor& g = fam.group(group_index);
    if (!g.orderable())
      throw UnsupportedError("family group " + std::to_string(group_index) + " (" + g.name +
                             ") has no order decider");
    OrderSign s = g.order(local_word);
    if (s != OrderSign::zero) return s;
  }
  return OrderSign::zero;
}

std::string direct_sum_key(const Family& fam, const Word& global_word) {
  std::string out;
  for (const auto& [group_index, local_word] : project_components(fam, global_word)) {
    const GroupDescriptor& g = fam.group(group_index);
    if (g.trivial(local_word)) continue;
    out += std::to_string(group_index) + "=" + g.element_key(local_word) + ";";
  }
  return out;
}

GroupDescriptor direct_sum_descriptor(const Family& fam) {
  if (!fam.is_finite())
    throw UnsupportedError("the whole-direct-sum view needs a finite family");
  GroupDescriptor g;
  g.name = "direct sum";
  g.signature = "sum(" + fam.signature() + ")";
  g.generator_count = fam.global_generator_count();
  g.trivial = [fam](const Word& w) { return direct_sum_trivial(fam, w); };
  g.element_key = [fam](const Word& w) { return direct_sum_key(fam, w); };
  bool orderable = true;
  for (int i = 1; i <= fam.group_count(); ++i) orderable = orderable && fam.group(i).orderable();
  if (orderable)
    g.order = [fam](const Word& w) { return direct_sum_sign(fam, w); };
  return g;
}

}  // namespace wreathlab
