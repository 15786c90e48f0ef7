#include "hemb/term_class.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "hemb/flat_term.hpp"

namespace hemb {

ClassCapExceeded::ClassCapExceeded(std::size_t cap)
    : std::runtime_error("equivalence class exceeds the cap of " + std::to_string(cap) +
                         " terms"),
      cap_(cap) {}

namespace {

using TermSet = std::vector<Term>;

class ClassBuilder {
 public:
  explicit ClassBuilder(std::size_t cap) : cap_(cap) {}

  TermSet build(const FlatTerm& ft) {
    if (ft.is_leaf()) return {unflatten(ft)};
    std::vector<TermSet> kids;
    kids.reserve(ft.arity());
    for (const auto& a : ft.args()) kids.push_back(build(a));
    const Axioms ax = ft.axioms();
    if (ax.assoc && ax.comm) return build_ac(ft.symbol(), kids);
    if (ax.assoc) return build_a(ft.symbol(), kids);
    if (ax.comm) {
      TermSet out = product(ft.symbol(), {&kids[0], &kids[1]});
      append(out, product(ft.symbol(), {&kids[1], &kids[0]}));
      return dedupe(std::move(out));
    }
    std::vector<const TermSet*> refs;
    for (const auto& k : kids) refs.push_back(&k);
    return product(ft.symbol(), refs);
  }

 private:
  void check(std::size_t n) const {
    if (n > cap_) throw ClassCapExceeded(cap_);
  }

  TermSet product(const std::string& op, const std::vector<const TermSet*>& parts) const {
    std::size_t total = 1;
    for (const auto* p : parts) {
      if (p->empty()) return {};
      if (total > cap_ / p->size()) throw ClassCapExceeded(cap_);
      total *= p->size();
    }
    TermSet out;
    out.reserve(total);
    std::vector<std::size_t> idx(parts.size(), 0);
    while (true) {
      std::vector<Term> args;
      args.reserve(parts.size());
      for (std::size_t i = 0; i < parts.size(); ++i) args.push_back((*parts[i])[idx[i]]);
      out.push_back(Term::app(op, std::move(args)));
      std::size_t i = parts.size();
      while (i > 0) {
        --i;
        if (++idx[i] < parts[i]->size()) break;
        idx[i] = 0;
        if (i == 0) return out;
      }
      if (parts.empty()) return out;
    }
  }

  void append(TermSet& into, TermSet more) const {
    check(into.size() + more.size());
    into.insert(into.end(), std::make_move_iterator(more.begin()),
                std::make_move_iterator(more.end()));
  }

  TermSet dedupe(TermSet v) const {
    std::unordered_set<Term, TermHash> seen;
    TermSet out;
    for (auto& t : v)
      if (seen.insert(t).second) out.push_back(std::move(t));
    check(out.size());
    return out;
  }

  // All bracketings of the argument sequence.
  TermSet build_a(const std::string& op, const std::vector<TermSet>& kids) {
    const std::size_t k = kids.size();
    std::vector<std::vector<TermSet>> seg(k, std::vector<TermSet>(k));
    for (std::size_t i = 0; i < k; ++i) seg[i][i] = kids[i];
    for (std::size_t len = 2; len <= k; ++len) {
      for (std::size_t i = 0; i + len <= k; ++i) {
        const std::size_t j = i + len - 1;
        TermSet acc;
        for (std::size_t m = i; m < j; ++m)
          append(acc, product(op, {&seg[i][m], &seg[m + 1][j]}));
        seg[i][j] = dedupe(std::move(acc));
      }
    }
    return seg[0][k - 1];
  }

  // All bracketings of all orderings: dynamic program over sub-multisets.
  TermSet build_ac(const std::string& op, const std::vector<TermSet>& kids) {
    const std::size_t k = kids.size();
    // k! * Catalan(k-1) grows past any sane cap long before 2^k masks hurt;
    // refuse early so the mask space stays small.
    if (k > 16) throw ClassCapExceeded(cap_);
    std::unordered_map<std::uint32_t, TermSet> memo;
    std::function<const TermSet&(std::uint32_t)> go = [&](std::uint32_t mask) -> const TermSet& {
      if (auto it = memo.find(mask); it != memo.end()) return it->second;
      TermSet acc;
      if (std::popcount(mask) == 1) {
        acc = kids[std::countr_zero(mask)];
      } else {
        for (std::uint32_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
          const TermSet& left = go(sub);
          const TermSet& right = go(mask & ~sub);
          append(acc, product(op, {&left, &right}));
        }
        acc = dedupe(std::move(acc));
      }
      return memo.emplace(mask, std::move(acc)).first->second;
    };
    return go((std::uint32_t{1} << k) - 1);
  }

  std::size_t cap_;
};

}  // namespace

std::vector<Term> enumerate_class(const Term& t, const Signature& sig, std::size_t cap) {
  std::vector<Term> out = ClassBuilder(cap).build(flatten(t, sig));
  std::vector<std::pair<std::string, Term>> keyed;
  keyed.reserve(out.size());
  for (auto& u : out) keyed.emplace_back(u.str(), std::move(u));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& [k, u] : keyed) out.push_back(std::move(u));
  return out;
}

std::size_t class_size(const Term& t, const Signature& sig, std::size_t cap) {
  return ClassBuilder(cap).build(flatten(t, sig)).size();
}

}  // namespace hemb
