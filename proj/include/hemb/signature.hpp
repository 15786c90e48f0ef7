#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hemb {

/// Name of the single sort of a universal signature.
inline constexpr const char* kUniversalSort = "U";
/// Name of the fresh constant that stands in for every variable.
inline constexpr const char* kSharp = "#";

struct Axioms {
  bool assoc = false;
  bool comm = false;

  bool free() const { return !assoc && !comm; }
  bool is_a() const { return assoc && !comm; }
  bool is_c() const { return comm && !assoc; }
  bool is_ac() const { return assoc && comm; }

  friend bool operator==(const Axioms&, const Axioms&) = default;
};

std::string to_string(Axioms ax);

struct OperatorDecl {
  std::string name;
  std::vector<std::string> arg_sorts;
  std::string result_sort;
  Axioms axioms;

  std::size_t arity() const { return arg_sorts.size(); }
};

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite poset of sorts. Stores the reflexive-transitive closure of the
/// declared subsort pairs; every connected component carries a unique top.
class SortPoset {
 public:
  void add_sort(const std::string& s);
  /// Declares `lo < hi`. Throws if this would create a cycle.
  void add_subsort(const std::string& lo, const std::string& hi);
  /// Synthesizes `Top-<min sort>` for every component without a unique
  /// maximal element. Idempotent.
  void close();

  bool contains(const std::string& s) const { return sorts_.count(s) != 0; }
  bool leq(const std::string& a, const std::string& b) const;
  /// The top sort of the component containing `s`.
  std::string top(const std::string& s) const;
  bool same_component(const std::string& a, const std::string& b) const;

  const std::vector<std::string>& sorts() const { return order_; }

 private:
  std::set<std::string> sorts_;
  std::vector<std::string> order_;
  std::set<std::pair<std::string, std::string>> strict_;  // transitive, irreflexive
  std::map<std::string, std::string> top_;
};

/// An order-sorted signature without ad-hoc overloading.
class Signature {
 public:
  Signature() = default;

  SortPoset& poset() { return poset_; }
  const SortPoset& poset() const { return poset_; }

  /// Adds an operator; rejects duplicates, unknown sorts, and axiom flags on
  /// operators that are not binary with equal argument sorts.
  void add_op(OperatorDecl decl);

  const OperatorDecl* find(const std::string& name) const;
  const OperatorDecl& op(const std::string& name) const;
  /// Axioms of `name`; operators not in the signature (e.g. `#` before the
  /// universal transform) are treated as free.
  Axioms axioms(const std::string& name) const;

  /// Operators in declaration order.
  const std::vector<OperatorDecl>& ops() const { return ops_; }
  bool empty() const { return ops_.empty(); }

  /// Number of free / A / C / AC operators of arity >= 1 (free includes
  /// constants).
  struct AxiomCounts {
    std::size_t free = 0, a = 0, c = 0, ac = 0;
  };
  AxiomCounts axiom_counts() const;

  std::string name;

 private:
  SortPoset poset_;
  std::vector<OperatorDecl> ops_;
  std::map<std::string, std::size_t> index_;
};

/// Collapses every sort into the universal sort `U`, keeps axiom flags, and
/// adds the constant `#`. The result lists `#` first, then the original
/// operators in declaration order.
Signature to_universal(const Signature& sig);

bool is_universal(const Signature& sig);

}  // namespace hemb
