#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hemb/engine.hpp"
#include "hemb/signature.hpp"
#include "hemb/term.hpp"

namespace hemb {

class GenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How many operators of each axiom kind (arity >= 1) the generator may use.
/// Constants of the signature are always available.
struct SymbolMix {
  std::size_t free = 0, c = 0, a = 0, ac = 0;

  /// Everything the signature offers.
  static SymbolMix all_of(const Signature& sig);
};

struct GenSpec {
  std::uint64_t seed = 42;
  std::size_t t1_depth = 5;
  std::vector<std::size_t> t2_depths{5};
  SymbolMix mix;
  /// Goals generated per T2 depth.
  std::size_t goals_per_depth = 1;
  /// Depth bound for arguments off the spine that realizes the exact depth.
  std::size_t side_depth = 2;
  /// Probability that a leaf is a fresh variable rather than a constant.
  double var_ratio = 0.1;
  /// Rejection-sampling attempts per goal when looking for a false goal.
  std::size_t max_resample = 1000;
};

using Rng = std::mt19937_64;

/// Random well-sorted term of exactly `depth` (non-flattened nesting depth).
Term gen_term(const GenSpec& spec, const Signature& sig, std::size_t depth, Rng& rng);

/// Deterministic convenience form: a term of depth `spec.t1_depth` from
/// `spec.seed`.
Term gen_term(const GenSpec& spec, const Signature& sig);

struct BenchGoal {
  std::size_t id = 0;
  Term t1;
  Term t2;
};

/// Goals `t1 <| t2` that do not hold (checked with the short-circuit flat
/// engine), one batch per T2 depth.
std::vector<BenchGoal> gen_false_goals(const GenSpec& spec, const Signature& sig);

struct BenchRow {
  Engine engine = Engine::Sml;
  std::size_t goal_id = 0;
  std::size_t t1_ot = 0, t1_ft = 0;
  std::size_t t2_ot = 0, t2_ft = 0;
  Outcome outcome = Outcome::False;
  double time_ms = 0.0;
  std::uint64_t states = 0;
  std::uint64_t calls = 0;
};

struct BenchConfig {
  std::vector<Engine> engines;
  Budget budget = Budget::millis(60'000);
  /// Timed repetitions per cell; the median is reported. A Timeout ends the
  /// repetitions for that cell.
  std::size_t reps = 10;
};

std::vector<BenchRow> run_bench(const Signature& sig, const std::vector<BenchGoal>& goals,
                                const BenchConfig& cfg);

std::vector<BenchRow> run_bench(const Signature& sig, const GenSpec& spec,
                                const BenchConfig& cfg);

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

/// Non-flattened and flattened depth of `t`.
std::size_t original_depth(const Term& t);
std::size_t flat_depth(const Term& t, const Signature& sig);

}  // namespace hemb
