#pragma once

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

#include "hemb/engine.hpp"
#include "hemb/signature.hpp"
#include "hemb/term.hpp"

namespace hemb {

/// Raised when an embedding check inside the whistle runs out of budget.
class WhistleTimeout : public std::runtime_error {
 public:
  explicit WhistleTimeout(std::size_t index)
      : std::runtime_error("embedding check timed out"), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

struct Pass {};
struct Blow {
  std::size_t index;
};
using WhistleResult = std::variant<Pass, Blow>;

/// Online termination check: a new term blows the whistle when it embeds
/// (modulo B) some earlier term of the history.
class Whistle {
 public:
  Whistle(Signature sig, Engine engine, Budget per_check = {});

  /// Checks `t` against the history oldest-first. On Pass, `t` is appended.
  WhistleResult add(const Term& t);

  const std::vector<Term>& history() const { return history_; }
  Engine engine() const { return engine_; }

 private:
  Signature sig_;
  Engine engine_;
  Budget budget_;
  std::vector<Term> history_;
};

}  // namespace hemb
