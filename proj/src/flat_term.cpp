#include "hemb/flat_term.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hash.hpp"

namespace hemb {

FlatTerm FlatTerm::finish(std::shared_ptr<Node> n) {
  std::size_t h = detail::mix(n->is_var ? 3 : 4, detail::hash_str(n->symbol));
  h = detail::mix(h, (n->ax.assoc ? 1u : 0u) | (n->ax.comm ? 2u : 0u));
  std::size_t child_bin = 0;
  for (const auto& a : n->args) {
    h = detail::mix(h, a.hash());
    n->nodes += a.nodes();
    child_bin += a.binary_size();
    n->depth = std::max(n->depth, a.depth() + 1);
    n->ground = n->ground && a.ground();
  }
  if (!n->args.empty())
    n->binary_size = child_bin + (n->ax.assoc ? n->args.size() - 1 : 1);
  n->hash = h;
  return FlatTerm(std::move(n));
}

FlatTerm FlatTerm::leaf(std::string symbol, Axioms ax) {
  auto n = std::make_shared<Node>();
  n->symbol = std::move(symbol);
  n->ax = ax;
  return finish(std::move(n));
}

FlatTerm FlatTerm::variable(std::string name, std::string sort) {
  auto n = std::make_shared<Node>();
  n->symbol = name + ":" + sort;
  n->sort = std::move(sort);
  n->is_var = true;
  n->ground = false;
  return finish(std::move(n));
}

FlatTerm FlatTerm::sharp_leaf() {
  static const FlatTerm s = leaf(kSharp);
  return s;
}

bool FlatTerm::is_sharp() const {
  return !node_->is_var && node_->args.empty() && node_->symbol == kSharp;
}

FlatTerm FlatTerm::raw(std::string op, Axioms ax, std::vector<FlatTerm> args) {
  auto n = std::make_shared<Node>();
  n->symbol = std::move(op);
  n->ax = ax;
  n->args = std::move(args);
  return finish(std::move(n));
}

FlatTerm FlatTerm::make(std::string op, Axioms ax, std::vector<FlatTerm> args) {
  if (ax.assoc) {
    const bool nested = std::any_of(args.begin(), args.end(), [&](const FlatTerm& a) {
      return !a.is_var() && !a.is_leaf() && a.symbol() == op;
    });
    if (nested) {
      std::vector<FlatTerm> spliced;
      spliced.reserve(args.size() + 2);
      for (auto& a : args) {
        if (!a.is_var() && !a.is_leaf() && a.symbol() == op)
          spliced.insert(spliced.end(), a.args().begin(), a.args().end());
        else
          spliced.push_back(std::move(a));
      }
      args = std::move(spliced);
    }
    if (args.size() == 1) return args.front();
  }
  if (ax.comm) std::sort(args.begin(), args.end(), FlatLess{});
  return raw(std::move(op), ax, std::move(args));
}

bool operator==(const FlatTerm& a, const FlatTerm& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.nodes != y.nodes || x.is_var != y.is_var || !(x.ax == y.ax) ||
      x.symbol != y.symbol || x.args.size() != y.args.size())
    return false;
  return std::equal(x.args.begin(), x.args.end(), y.args.begin());
}

std::strong_ordering term_order(const FlatTerm& a, const FlatTerm& b) {
  if (&a == &b) return std::strong_ordering::equal;
  if (int c = a.symbol().compare(b.symbol()); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (auto c = term_order(a.args()[i], b.args()[i]); c != 0) return c;
  if (auto c = a.is_var() <=> b.is_var(); c != 0) return c;
  auto tag = [](Axioms ax) { return (ax.assoc ? 1 : 0) | (ax.comm ? 2 : 0); };
  return tag(a.axioms()) <=> tag(b.axioms());
}

namespace {
void print(std::ostream& os, const FlatTerm& t) {
  os << t.symbol();
  if (t.is_leaf()) return;
  os << '[';
  bool first = true;
  for (const auto& a : t.args()) {
    if (!first) os << ',';
    first = false;
    print(os, a);
  }
  os << ']';
}
}  // namespace

std::string FlatTerm::str() const {
  std::ostringstream os;
  print(os, *this);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FlatTerm& t) {
  print(os, t);
  return os;
}

FlatTerm flatten(const Term& t, const Signature& sig) {
  if (t.is_var()) return FlatTerm::variable(t.name(), t.sort());
  const Axioms ax = sig.axioms(t.name());
  if (t.arity() == 0) return FlatTerm::leaf(t.name(), ax);
  std::vector<FlatTerm> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(flatten(a, sig));
  return FlatTerm::make(t.name(), ax, std::move(args));
}

Term unflatten(const FlatTerm& ft) {
  if (ft.is_var()) {
    const auto& sym = ft.symbol();
    return Term::var(sym.substr(0, sym.size() - ft.sort().size() - 1), ft.sort());
  }
  std::vector<Term> args;
  args.reserve(ft.arity());
  for (const auto& a : ft.args()) args.push_back(unflatten(a));
  if (ft.axioms().assoc && args.size() > 2) {
    Term acc = args.back();
    for (std::size_t i = args.size() - 1; i-- > 0;) acc = Term::app(ft.symbol(), {args[i], acc});
    return acc;
  }
  return Term::app(ft.symbol(), std::move(args));
}

bool eq_mod_b(const Term& a, const Term& b, const Signature& sig) {
  return flatten(a, sig) == flatten(b, sig);
}

}  // namespace hemb
