#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hemb {

class Signature;

/// Immutable term: a sorted variable or an operator application. Copies
/// share structure.
class Term {
 public:
  static Term var(std::string name, std::string sort);
  static Term app(std::string op, std::vector<Term> args = {});

  bool is_var() const { return node_->is_var; }
  /// Operator name for applications, variable name for variables.
  const std::string& name() const { return node_->name; }
  /// Sort annotation of a variable; empty for applications.
  const std::string& sort() const { return node_->sort; }
  std::span<const Term> args() const { return node_->args; }
  std::size_t arity() const { return node_->args.size(); }

  /// Number of symbol occurrences (variables count as one).
  std::size_t size() const { return node_->size; }
  std::size_t depth() const { return node_->depth; }
  std::size_t hash() const { return node_->hash; }
  bool ground() const { return node_->ground; }

  /// Node identity, used as a memoization key.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);

  std::string str() const;

 private:
  struct Node {
    bool is_var = false;
    std::string name;
    std::string sort;
    std::vector<Term> args;
    std::size_t size = 1;
    std::size_t depth = 1;
    std::size_t hash = 0;
    bool ground = true;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

std::ostream& operator<<(std::ostream& os, const Term& t);

/// Replaces every variable by the constant `#`.
Term sharp(const Term& t);

/// Re-annotates every variable with the universal sort.
Term to_universal(const Term& t);

/// Least sort of a well-sorted term. Throws SignatureError on unknown
/// operators.
std::string sort_of(const Term& t, const Signature& sig);

/// Checks arity and argument sorts against `sig`; throws SignatureError
/// naming the offending subterm.
void check_well_sorted(const Term& t, const Signature& sig);

}  // namespace hemb
