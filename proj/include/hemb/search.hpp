#pragma once

#include <vector>

#include "hemb/flat_term.hpp"
#include "hemb/syntactic.hpp"
#include "hemb/verdict.hpp"

namespace hemb {

/// All canonical results of one projection step modulo B at any position of
/// the ground canonical term `t`. For an A node the step deletes a
/// contiguous nonempty block of arguments, for an AC node a nonempty
/// sub-multiset; at least one argument always remains.
std::vector<FlatTerm> one_step_successors(const FlatTerm& t);

/// Reachability `(rhs^u)# ->* (lhs^u)#` over the projection rules modulo B,
/// breadth-first with a visited set of canonical forms. States smaller than
/// the target are pruned.
Verdict embeds_naive(const EmbedGoal& goal, const Budget& budget = {});

/// Goal-driven proof search: each ground subgoal `u <| v` is closed by a
/// base rule, by Diving into an argument (or any split / sub-multiset of an
/// A / AC argument list), or by Coupling over every alignment allowed by the
/// root's axioms. Alternatives are tried depth first with backtracking.
Verdict embeds_rogd(const EmbedGoal& goal, const Budget& budget = {});

}  // namespace hemb
