#include "hemb/term.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hash.hpp"
#include "hemb/signature.hpp"

namespace hemb {

Term Term::var(std::string name, std::string sort) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->hash = detail::mix(detail::mix(1, detail::hash_str(name)), detail::hash_str(sort));
  n->name = std::move(name);
  n->sort = std::move(sort);
  n->ground = false;
  return Term(std::move(n));
}

Term Term::app(std::string op, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  std::size_t h = detail::mix(2, detail::hash_str(op));
  for (const auto& a : args) {
    h = detail::mix(h, a.hash());
    n->size += a.size();
    n->depth = std::max(n->depth, a.depth() + 1);
    n->ground = n->ground && a.ground();
  }
  n->hash = h;
  n->name = std::move(op);
  n->args = std::move(args);
  return Term(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.is_var != y.is_var || x.size != y.size || x.name != y.name ||
      x.sort != y.sort || x.args.size() != y.args.size())
    return false;
  return std::equal(x.args.begin(), x.args.end(), y.args.begin());
}

namespace {
void print(std::ostream& os, const Term& t) {
  if (t.is_var()) {
    os << t.name() << ':' << t.sort();
    return;
  }
  os << t.name();
  if (t.arity() == 0) return;
  os << '(';
  bool first = true;
  for (const auto& a : t.args()) {
    if (!first) os << ',';
    first = false;
    print(os, a);
  }
  os << ')';
}
}  // namespace

std::string Term::str() const {
  std::ostringstream os;
  print(os, *this);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  print(os, t);
  return os;
}

Term sharp(const Term& t) {
  if (t.is_var()) return Term::app(kSharp);
  if (t.ground()) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(sharp(a));
  return Term::app(t.name(), std::move(args));
}

Term to_universal(const Term& t) {
  if (t.is_var()) return Term::var(t.name(), kUniversalSort);
  if (t.ground()) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(to_universal(a));
  return Term::app(t.name(), std::move(args));
}

std::string sort_of(const Term& t, const Signature& sig) {
  if (t.is_var()) return t.sort();
  return sig.op(t.name()).result_sort;
}

void check_well_sorted(const Term& t, const Signature& sig) {
  if (t.is_var()) {
    if (!sig.poset().contains(t.sort()))
      throw SignatureError("unknown sort " + t.sort() + " for variable " + t.name());
    return;
  }
  const auto* decl = sig.find(t.name());
  if (!decl) throw SignatureError("unknown operator " + t.name());
  if (decl->arity() != t.arity())
    throw SignatureError("operator " + t.name() + " expects " + std::to_string(decl->arity()) +
                         " arguments, got " + std::to_string(t.arity()));
  for (std::size_t i = 0; i < t.arity(); ++i) {
    const Term& a = t.args()[i];
    check_well_sorted(a, sig);
    const std::string s = sort_of(a, sig);
    if (!sig.poset().leq(s, decl->arg_sorts[i]))
      throw SignatureError("argument " + std::to_string(i + 1) + " of " + t.name() + " has sort " +
                           s + ", expected " + decl->arg_sorts[i] + ": " + a.str());
  }
}

}  // namespace hemb
