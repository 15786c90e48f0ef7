#include "hemb/signature.hpp"

#include <algorithm>

namespace hemb {

std::string to_string(Axioms ax) {
  if (ax.is_ac()) return "AC";
  if (ax.is_a()) return "A";
  if (ax.is_c()) return "C";
  return "free";
}

void SortPoset::add_sort(const std::string& s) {
  if (sorts_.insert(s).second) order_.push_back(s);
  top_.clear();
}

void SortPoset::add_subsort(const std::string& lo, const std::string& hi) {
  if (!contains(lo)) throw SignatureError("unknown sort " + lo);
  if (!contains(hi)) throw SignatureError("unknown sort " + hi);
  if (lo == hi || leq(hi, lo))
    throw SignatureError("subsort cycle between " + lo + " and " + hi);
  std::vector<std::string> below{lo}, above{hi};
  for (const auto& [a, b] : strict_) {
    if (b == lo) below.push_back(a);
    if (a == hi) above.push_back(b);
  }
  for (const auto& a : below)
    for (const auto& b : above) strict_.emplace(a, b);
  top_.clear();
}

bool SortPoset::leq(const std::string& a, const std::string& b) const {
  return a == b || strict_.count({a, b}) != 0;
}

bool SortPoset::same_component(const std::string& a, const std::string& b) const {
  return top(a) == top(b);
}

void SortPoset::close() {
  // Union-find over sorts.
  std::map<std::string, std::string> parent;
  for (const auto& s : order_) parent[s] = s;
  auto find = [&](std::string s) {
    while (parent[s] != s) s = parent[s] = parent[parent[s]];
    return s;
  };
  for (const auto& [a, b] : strict_) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::string, std::vector<std::string>> comps;
  for (const auto& s : order_) comps[find(s)].push_back(s);

  std::map<std::string, std::string> tops;
  std::vector<std::pair<std::string, std::vector<std::string>>> to_add;
  for (const auto& [rep, members] : comps) {
    std::vector<std::string> maximal;
    for (const auto& s : members) {
      bool has_above = std::any_of(members.begin(), members.end(), [&](const auto& o) {
        return o != s && strict_.count({s, o});
      });
      if (!has_above) maximal.push_back(s);
    }
    if (maximal.size() == 1) {
      for (const auto& s : members) tops[s] = maximal.front();
    } else {
      const std::string top = "Top-" + *std::min_element(members.begin(), members.end());
      if (contains(top)) throw SignatureError("synthesized sort name clashes: " + top);
      to_add.emplace_back(top, maximal);
      for (const auto& s : members) tops[s] = top;
      tops[top] = top;
    }
  }
  for (const auto& [top, maximal] : to_add) {
    sorts_.insert(top);
    order_.push_back(top);
    for (const auto& m : maximal) {
      strict_.emplace(m, top);
      for (const auto& [a, b] : std::set(strict_))
        if (b == m) strict_.emplace(a, top);
    }
  }
  top_ = std::move(tops);
}

std::string SortPoset::top(const std::string& s) const {
  if (auto it = top_.find(s); it != top_.end()) return it->second;
  if (!contains(s)) throw SignatureError("unknown sort " + s);
  std::set<std::string> comp{s};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [a, b] : strict_) {
      if (comp.count(a) && comp.insert(b).second) grew = true;
      if (comp.count(b) && comp.insert(a).second) grew = true;
    }
  }
  std::vector<std::string> maximal;
  for (const auto& m : comp) {
    bool has_above = std::any_of(comp.begin(), comp.end(),
                                 [&](const auto& o) { return strict_.count({m, o}) != 0; });
    if (!has_above) maximal.push_back(m);
  }
  if (maximal.size() == 1) return maximal.front();
  return "Top-" + *comp.begin();
}

void Signature::add_op(OperatorDecl decl) {
  if (index_.count(decl.name)) throw SignatureError("duplicate operator " + decl.name);
  for (const auto& s : decl.arg_sorts)
    if (!poset_.contains(s)) throw SignatureError("unknown sort " + s + " in operator " + decl.name);
  if (!poset_.contains(decl.result_sort))
    throw SignatureError("unknown sort " + decl.result_sort + " in operator " + decl.name);
  if (decl.axioms.assoc || decl.axioms.comm) {
    if (decl.arity() != 2)
      throw SignatureError("assoc/comm operator " + decl.name + " must be binary");
    if (decl.arg_sorts[0] != decl.arg_sorts[1])
      throw SignatureError("assoc/comm operator " + decl.name + " needs equal argument sorts");
    if (decl.axioms.assoc && !poset_.same_component(decl.arg_sorts[0], decl.result_sort))
      throw SignatureError("assoc operator " + decl.name +
                           " must have its result in the argument sort's component");
  }
  index_[decl.name] = ops_.size();
  ops_.push_back(std::move(decl));
}

const OperatorDecl* Signature::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &ops_[it->second];
}

const OperatorDecl& Signature::op(const std::string& name) const {
  if (const auto* d = find(name)) return *d;
  throw SignatureError("unknown operator " + name);
}

Axioms Signature::axioms(const std::string& name) const {
  const auto* d = find(name);
  return d ? d->axioms : Axioms{};
}

Signature::AxiomCounts Signature::axiom_counts() const {
  AxiomCounts c;
  for (const auto& op : ops_) {
    if (op.axioms.is_ac()) ++c.ac;
    else if (op.axioms.is_a()) ++c.a;
    else if (op.axioms.is_c()) ++c.c;
    else ++c.free;
  }
  return c;
}

Signature to_universal(const Signature& sig) {
  Signature u;
  u.name = sig.name.empty() ? std::string(kUniversalSort) : sig.name + "-U";
  u.poset().add_sort(kUniversalSort);
  u.poset().close();
  u.add_op({kSharp, {}, kUniversalSort, {}});
  for (const auto& op : sig.ops()) {
    if (op.name == kSharp) continue;
    u.add_op({op.name, std::vector<std::string>(op.arity(), kUniversalSort), kUniversalSort,
              op.axioms});
  }
  return u;
}

bool is_universal(const Signature& sig) {
  return sig.poset().sorts().size() == 1 && sig.poset().sorts().front() == kUniversalSort &&
         sig.find(kSharp) != nullptr;
}

}  // namespace hemb
