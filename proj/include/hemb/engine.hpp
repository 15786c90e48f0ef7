#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hemb/syntactic.hpp"
#include "hemb/verdict.hpp"

namespace hemb {

enum class Engine { Naive, Rogd, Ml, Sml, Oracle };

std::string to_string(Engine e);
std::optional<Engine> parse_engine(std::string_view name);
const std::vector<Engine>& all_engines();

/// Uniform dispatch over the five deciders. The oracle ignores the budget
/// and reports the enumerated pair count in `recursive_calls`.
Verdict run_engine(Engine e, const EmbedGoal& goal, const Budget& budget = {});

}  // namespace hemb
