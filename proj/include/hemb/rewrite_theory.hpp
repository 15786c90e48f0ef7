#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hemb/flat_term.hpp"
#include "hemb/signature.hpp"

namespace hemb {

/// A goal `lhs <| rhs` in a goal-driven rule.
struct EmbedPattern {
  FlatTerm lhs;
  FlatTerm rhs;
};

/// One generated rule. For projection theories `lhs -> rhs` holds the
/// patterns in `lhs`/`rhs`; for goal-driven theories the rule rewrites
/// `goal` to the conjunction `subgoals` (empty means `true`).
struct RewriteRule {
  std::string label;
  FlatTerm lhs = FlatTerm::sharp_leaf();
  FlatTerm rhs = FlatTerm::sharp_leaf();
  EmbedPattern goal{FlatTerm::sharp_leaf(), FlatTerm::sharp_leaf()};
  std::vector<EmbedPattern> subgoals;
};

struct RewriteTheory {
  enum class Kind { EmbU, Rogd };
  Kind kind = Kind::EmbU;
  std::vector<RewriteRule> rules;
  Signature sig;  // universal signature, including `#`
};

/// Projection rules `f(X1:U,...,Xn:U) -> Xi:U` over the universal signature,
/// without rules that are B-instances of an earlier kept rule.
RewriteTheory gen_emb_rules(const Signature& sig);

/// Number of projection rules before redundancy elimination.
std::size_t emb_rule_count_raw(const Signature& sig);

/// Goal-driven rules: a `true` rule per constant (including `#`), Diving and
/// Coupling per operator, plus the C/A/AC coupling variants; rules that are
/// B-instances of an earlier kept rule are dropped and their labels merged
/// into the subsuming rule.
RewriteTheory gen_rogd_rules(const Signature& sig);

std::size_t rogd_rule_count_raw(const Signature& sig);

/// One rule per line: `lhs -> rhs` for projection theories and
/// `[label] u <| v => goals` for goal-driven ones.
void print_theory(std::ostream& os, const RewriteTheory& th);
std::string theory_to_string(const RewriteTheory& th);

/// True iff `pattern` matches `subject` modulo the axioms recorded on the
/// flat nodes; variables of `subject` are treated as constants. Exposed for
/// testing.
bool matches_mod_b(const FlatTerm& pattern, const FlatTerm& subject);

}  // namespace hemb
