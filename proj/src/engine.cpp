#include "hemb/engine.hpp"

#include <array>

#include "hemb/meta_embed.hpp"
#include "hemb/search.hpp"

namespace hemb {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::True: return "true";
    case Outcome::False: return "false";
    case Outcome::Timeout: return "timeout";
  }
  return "?";
}

namespace {
constexpr std::array<std::pair<Engine, std::string_view>, 5> kNames{{
    {Engine::Naive, "naive"},
    {Engine::Rogd, "rogd"},
    {Engine::Ml, "ml"},
    {Engine::Sml, "sml"},
    {Engine::Oracle, "oracle"},
}};
}  // namespace

std::string to_string(Engine e) {
  for (const auto& [k, name] : kNames)
    if (k == e) return std::string(name);
  return "?";
}

std::optional<Engine> parse_engine(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

const std::vector<Engine>& all_engines() {
  static const std::vector<Engine> v{Engine::Oracle, Engine::Naive, Engine::Rogd, Engine::Ml,
                                     Engine::Sml};
  return v;
}

Verdict run_engine(Engine e, const EmbedGoal& goal, const Budget& budget) {
  switch (e) {
    case Engine::Naive: return embeds_naive(goal, budget);
    case Engine::Rogd: return embeds_rogd(goal, budget);
    case Engine::Ml: return embeds_flat(goal, MetaVariant::Strict, budget);
    case Engine::Sml: return embeds_flat(goal, MetaVariant::ShortCircuit, budget);
    case Engine::Oracle: break;
  }
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  std::size_t pairs = 0;
  v.outcome = oracle_embeds(goal, kDefaultClassCap, &pairs) ? Outcome::True : Outcome::False;
  v.stats.recursive_calls = pairs;
  v.stats.wall_time = std::chrono::steady_clock::now() - start;
  return v;
}

}  // namespace hemb
