#pragma once

#include <cstddef>

#include "hemb/signature.hpp"
#include "hemb/term.hpp"
#include "hemb/term_class.hpp"
#include "hemb/verdict.hpp"

namespace hemb {

/// An embedding question `lhs <| rhs` over `sig`: does rhs embed lhs?
struct EmbedGoal {
  Term lhs;
  Term rhs;
  Signature sig;
};

/// Pure (Dershowitz) embedding on ground terms by Diving and Coupling.
/// Variables, if present, are compared as constants.
bool embeds_pure(const Term& s, const Term& t);

/// Variable-extended embedding: any variable embeds into any variable.
/// Evaluated directly over the Variable/Diving/Coupling rules.
bool embeds_var_rules(const Term& s, const Term& t);

/// Variable-extended embedding through the `#` reduction:
/// `embeds_pure(sharp(s^u), sharp(t^u))`.
bool embeds_var(const Term& s, const Term& t);

/// Brute-force embedding modulo B: enumerates the classes of both sharped
/// sides and looks for an embedding pair. The pair scan runs in parallel
/// (OpenMP) when available. Throws ClassCapExceeded. When `pairs` is set it
/// receives |class(lhs)| * |class(rhs)|.
bool oracle_embeds(const EmbedGoal& goal, std::size_t cap = kDefaultClassCap,
                   std::size_t* pairs = nullptr);

/// Single-threaded reference for `oracle_embeds`.
bool oracle_embeds_serial(const EmbedGoal& goal, std::size_t cap = kDefaultClassCap);

/// Number of class pairs examined by the oracle (|class(lhs)| * |class(rhs)|).
std::size_t oracle_pair_count(const EmbedGoal& goal, std::size_t cap = kDefaultClassCap);

}  // namespace hemb
