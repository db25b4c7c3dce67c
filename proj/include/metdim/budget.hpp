#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace metdim {

struct Budget {
  std::optional<std::chrono::milliseconds> time;
  std::optional<std::uint64_t> nodes;
};

/// Counts search nodes against a Budget; the wall clock is sampled every 256 ticks.
class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  /// Returns false once the budget is spent (and keeps returning false).
  bool tick() {
    ++nodes_;
    if (spent_) return false;
    if (budget_.nodes && nodes_ > *budget_.nodes) spent_ = true;
    if (budget_.time && (nodes_ & 0xff) == 0 && elapsed() > *budget_.time) spent_ = true;
    return !spent_;
  }

  bool spent() const { return spent_; }
  std::uint64_t nodes() const { return nodes_; }
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool spent_ = false;
};

}  // namespace metdim
