#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace hemb {

enum class Outcome { True, False, Timeout };

std::string to_string(Outcome o);

struct Stats {
  std::uint64_t states_expanded = 0;
  std::uint64_t recursive_calls = 0;
  std::uint64_t peak_frontier = 0;
  std::chrono::nanoseconds wall_time{0};

  double millis() const {
    return std::chrono::duration<double, std::milli>(wall_time).count();
  }
};

struct Verdict {
  Outcome outcome = Outcome::False;
  Stats stats;

  bool holds() const { return outcome == Outcome::True; }
};

/// Resource bound for one engine call. Unset fields are unbounded.
struct Budget {
  std::optional<std::chrono::milliseconds> max_time;
  std::optional<std::uint64_t> max_states;

  static Budget unbounded() { return {}; }
  static Budget millis(std::int64_t ms) {
    return Budget{std::chrono::milliseconds(ms), std::nullopt};
  }
};

/// Internal signal used by engines to unwind when a budget runs out.
struct BudgetExhausted {};

/// Tracks one engine call against its Budget. The clock is sampled every
/// `kClockStride` ticks.
class BudgetGuard {
 public:
  explicit BudgetGuard(const Budget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}

  /// Counts one state; throws BudgetExhausted when a bound is hit.
  void tick() {
    ++states_;
    if (budget_.max_states && states_ > *budget_.max_states) throw BudgetExhausted{};
    if (budget_.max_time && (states_ % kClockStride) == 0) check_clock();
  }

  void check_clock() const {
    if (budget_.max_time && std::chrono::steady_clock::now() - start_ >= *budget_.max_time)
      throw BudgetExhausted{};
  }

  std::uint64_t states() const { return states_; }
  std::chrono::nanoseconds elapsed() const {
    return std::chrono::steady_clock::now() - start_;
  }

 private:
  static constexpr std::uint64_t kClockStride = 256;
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t states_ = 0;
};

}  // namespace hemb
