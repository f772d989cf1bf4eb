#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "pirank/error.hpp"

namespace pirank {

/// Optional wall-clock limit polled by the long-running loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline unlimited() { return {}; }
  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.at_ = Clock::now() + budget;
    return d;
  }

  bool limited() const noexcept { return at_.has_value(); }
  bool expired() const { return at_ && Clock::now() >= *at_; }

  void check() const {
    if (expired()) throw BudgetExceeded();
  }

  /// Cheap variant for hot loops: only reads the clock every 4096 ticks.
  void poll(std::uint64_t tick) const {
    if (at_ && (tick & 0xFFFu) == 0) check();
  }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace pirank
