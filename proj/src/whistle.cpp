#include "hemb/whistle.hpp"

namespace hemb {

Whistle::Whistle(Signature sig, Engine engine, Budget per_check)
    : sig_(std::move(sig)), engine_(engine), budget_(per_check) {}

WhistleResult Whistle::add(const Term& t) {
  for (std::size_t i = 0; i < history_.size(); ++i) {
    const Verdict v = run_engine(engine_, EmbedGoal{history_[i], t, sig_}, budget_);
    if (v.outcome == Outcome::Timeout) throw WhistleTimeout(i);
    if (v.holds()) return Blow{i};
  }
  history_.push_back(t);
  return Pass{};
}

}  // namespace hemb
