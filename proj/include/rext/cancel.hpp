#pragma once

#include <atomic>
#include <stdexcept>

namespace rext {

struct cancelled : std::runtime_error {
  cancelled() : std::runtime_error("computation cancelled") {}
};

/// Cooperative cancellation for long exact computations.
///
/// A caller installs a flag for the current thread with a `cancel_scope`;
/// inner loops (determinant elimination in particular) poll it through
/// `check_cancelled()` and unwind with `rext::cancelled` once it is raised.
/// Without an installed scope the check is a no-op.
class cancel_scope {
 public:
  explicit cancel_scope(const std::atomic<bool>& flag) : previous_(current()) { current() = &flag; }
  ~cancel_scope() { current() = previous_; }
  cancel_scope(const cancel_scope&) = delete;
  cancel_scope& operator=(const cancel_scope&) = delete;

  static const std::atomic<bool>*& current() {
    thread_local const std::atomic<bool>* flag = nullptr;
    return flag;
  }

 private:
  const std::atomic<bool>* previous_;
};

inline void check_cancelled() {
  const auto* flag = cancel_scope::current();
  if (flag && flag->load(std::memory_order_relaxed)) throw cancelled();
}

}  // namespace rext
