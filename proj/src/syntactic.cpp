#include "hemb/syntactic.hpp"

#include <atomic>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hash.hpp"

namespace hemb {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<const void*, const void*>& p) const {
    return detail::mix(std::hash<const void*>{}(p.first), std::hash<const void*>{}(p.second));
  }
};

/// Diving / Coupling with a memo over node pairs. With `vars_unify` set, the
/// Variable rule lets any variable embed into any variable.
class PureEmbedding {
 public:
  explicit PureEmbedding(bool vars_unify) : vars_unify_(vars_unify) {}

  bool operator()(const Term& s, const Term& t) {
    const auto key = std::make_pair(s.id(), t.id());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool r = compute(s, t);
    memo_.emplace(key, r);
    return r;
  }

 private:
  bool compute(const Term& s, const Term& t) {
    if (s.is_var() && t.is_var()) return vars_unify_ || s == t;
    if (t.is_var()) return false;
    for (const auto& ti : t.args())
      if ((*this)(s, ti)) return true;
    if (s.is_var() || s.name() != t.name() || s.arity() != t.arity()) return false;
    for (std::size_t i = 0; i < s.arity(); ++i)
      if (!(*this)(s.args()[i], t.args()[i])) return false;
    return true;
  }

  bool vars_unify_;
  std::unordered_map<std::pair<const void*, const void*>, bool, PairHash> memo_;
};

struct Classes {
  std::vector<Term> lhs;
  std::vector<Term> rhs;
};

Classes sharped_classes(const EmbedGoal& goal, std::size_t cap) {
  const Signature u = is_universal(goal.sig) ? goal.sig : to_universal(goal.sig);
  return {enumerate_class(sharp(to_universal(goal.lhs)), u, cap),
          enumerate_class(sharp(to_universal(goal.rhs)), u, cap)};
}

}  // namespace

bool embeds_pure(const Term& s, const Term& t) { return PureEmbedding(false)(s, t); }

bool embeds_var_rules(const Term& s, const Term& t) { return PureEmbedding(true)(s, t); }

bool embeds_var(const Term& s, const Term& t) {
  return embeds_pure(sharp(to_universal(s)), sharp(to_universal(t)));
}

bool oracle_embeds_serial(const EmbedGoal& goal, std::size_t cap) {
  const Classes c = sharped_classes(goal, cap);
  for (const auto& u : c.lhs)
    for (const auto& v : c.rhs)
      if (embeds_pure(u, v)) return true;
  return false;
}

bool oracle_embeds(const EmbedGoal& goal, std::size_t cap, std::size_t* pairs) {
  const Classes c = sharped_classes(goal, cap);
  if (pairs) *pairs = c.lhs.size() * c.rhs.size();
  const auto n = static_cast<std::ptrdiff_t>(c.lhs.size());
  std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (const auto& v : c.rhs) {
      if (found.load(std::memory_order_relaxed)) break;
      if (embeds_pure(c.lhs[static_cast<std::size_t>(i)], v)) {
        found.store(true, std::memory_order_relaxed);
        break;
      }
    }
  }
  return found.load();
}

std::size_t oracle_pair_count(const EmbedGoal& goal, std::size_t cap) {
  const Classes c = sharped_classes(goal, cap);
  return c.lhs.size() * c.rhs.size();
}

}  // namespace hemb
