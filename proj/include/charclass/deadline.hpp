#pragma once

#include <chrono>
#include <optional>

#include "charclass/errors.hpp"

namespace charclass {

// Cooperative wall-clock budget checked inside long-running loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.until_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }

  bool expired() const noexcept { return until_ && Clock::now() >= *until_; }
  void check() const {
    if (expired()) throw TimeoutError("computation exceeded its time budget");
  }

 private:
  std::optional<Clock::time_point> until_;
};

}  // namespace charclass
