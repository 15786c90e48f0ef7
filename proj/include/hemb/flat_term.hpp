#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hemb/signature.hpp"
#include "hemb/term.hpp"

namespace hemb {

/// Flattened term in B-canonical form. Associative symbols are
/// poly-variadic with alien arguments; AC (and C) arguments are sorted by
/// `term_order`. Constants, `#` and variables are leaves.
///
/// Instances built through `FlatTerm::make` are canonical. Use
/// `FlatTerm::raw` only when the caller guarantees canonicity.
class FlatTerm {
 public:
  static FlatTerm leaf(std::string symbol, Axioms ax = {});
  static FlatTerm variable(std::string name, std::string sort);
  static FlatTerm sharp_leaf();

  /// Builds `op[args]` and canonicalizes the root: A/AC arguments rooted by
  /// `op` are spliced in, AC and C arguments are sorted. A single remaining
  /// argument of an A/AC symbol is returned as is.
  static FlatTerm make(std::string op, Axioms ax, std::vector<FlatTerm> args);
  static FlatTerm raw(std::string op, Axioms ax, std::vector<FlatTerm> args);

  const std::string& symbol() const { return node_->symbol; }
  Axioms axioms() const { return node_->ax; }
  bool is_var() const { return node_->is_var; }
  bool is_sharp() const;
  const std::string& sort() const { return node_->sort; }
  std::span<const FlatTerm> args() const { return node_->args; }
  std::size_t arity() const { return node_->args.size(); }
  bool is_leaf() const { return node_->args.empty(); }

  /// Number of nodes of this flat tree.
  std::size_t nodes() const { return node_->nodes; }
  /// Number of symbol occurrences of the binary (unflattened) term: a
  /// k-ary A/AC node contributes k-1 occurrences of its symbol.
  std::size_t binary_size() const { return node_->binary_size; }
  std::size_t depth() const { return node_->depth; }
  std::size_t hash() const { return node_->hash; }
  bool ground() const { return node_->ground; }

  /// Same symbol and axiom tag.
  bool same_root(const FlatTerm& o) const {
    return node_->symbol == o.node_->symbol && node_->ax == o.node_->ax &&
           node_->is_var == o.node_->is_var;
  }

  friend bool operator==(const FlatTerm& a, const FlatTerm& b);

  std::string str() const;

 private:
  struct Node {
    std::string symbol;
    std::string sort;
    Axioms ax;
    bool is_var = false;
    std::vector<FlatTerm> args;
    std::size_t nodes = 1;
    std::size_t binary_size = 1;
    std::size_t depth = 1;
    std::size_t hash = 0;
    bool ground = true;
  };
  explicit FlatTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static FlatTerm finish(std::shared_ptr<Node> n);
  std::shared_ptr<const Node> node_;
};

struct FlatTermHash {
  std::size_t operator()(const FlatTerm& t) const { return t.hash(); }
};

std::ostream& operator<<(std::ostream& os, const FlatTerm& t);

/// Total order on flat terms: symbol name, then argument count, then
/// arguments left to right. Variables sort by `Name:Sort`.
std::strong_ordering term_order(const FlatTerm& a, const FlatTerm& b);

struct FlatLess {
  bool operator()(const FlatTerm& a, const FlatTerm& b) const {
    return term_order(a, b) < 0;
  }
};

FlatTerm flatten(const Term& t, const Signature& sig);

/// Right-associated binary term whose flattening is `ft`.
Term unflatten(const FlatTerm& ft);

/// Equality modulo the A/C axioms of `sig`.
bool eq_mod_b(const Term& a, const Term& b, const Signature& sig);

}  // namespace hemb
