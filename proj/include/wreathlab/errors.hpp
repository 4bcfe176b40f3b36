#pragma once

#include <atomic>
#include <memory>
#include <stdexcept>
#include <string>

namespace wreathlab {

/// Malformed input: bad generator index, unparseable word, invalid config.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation requires structure the arguments do not provide
/// (e.g. a left-order on a torsion group).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search ran out of its node budget. Distinct from a negative answer:
/// callers must never turn this into "not found".
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Cancelled : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cooperative cancellation flag shared between a controller and running
/// decision procedures. Copies share the same flag.
class CancelToken {
 public:
  CancelToken() : flag_(std::make_shared<std::atomic<bool>>(false)) {}
  void cancel() const { flag_->store(true, std::memory_order_relaxed); }
  bool cancelled() const { return flag_->load(std::memory_order_relaxed); }

 private:
  std::shared_ptr<std::atomic<bool>> flag_;
};

/// Limits threaded through the search procedures.
struct SearchLimits {
  long long node_budget = 20'000'000;
  const CancelToken* cancel = nullptr;

  void tick(long long& counter, const char* what) const {
    if (++counter > node_budget) throw BudgetExceeded(std::string(what) + ": node budget exhausted");
    if (cancel != nullptr && (counter & 1023) == 0 && cancel->cancelled())
      throw Cancelled(std::string(what) + ": cancelled");
  }
};

}  // namespace wreathlab
