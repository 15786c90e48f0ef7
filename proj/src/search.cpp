#include "hemb/search.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace hemb {

namespace {

using FlatSet = std::unordered_set<FlatTerm, FlatTermHash>;

FlatTerm ground_flat(const Term& t, const Signature& sig) {
  return flatten(sharp(to_universal(t)), sig);
}

FlatTerm rebuild(const FlatTerm& node, std::vector<FlatTerm> args) {
  return FlatTerm::make(node.symbol(), node.axioms(), std::move(args));
}

std::vector<FlatTerm> pick(std::span<const FlatTerm> xs, const std::vector<char>& in, bool want) {
  std::vector<FlatTerm> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (static_cast<bool>(in[i]) == want) out.push_back(xs[i]);
  return out;
}

// Calls `fn(mask)` for every nonempty proper subset of {0..k-1}; stops early
// when `fn` returns true.
template <class Fn>
bool for_each_proper_subset(std::size_t k, Fn fn) {
  std::vector<char> in(k, 0);
  while (true) {
    std::size_t i = 0;
    while (i < k && in[i]) in[i++] = 0;
    if (i == k) return false;
    in[i] = 1;
    if (std::all_of(in.begin(), in.end(), [](char c) { return c != 0; })) return false;
    if (fn(in)) return true;
  }
}

// Results of projecting at the root of `t`. `guard` is ticked per result.
void root_steps(const FlatTerm& t, FlatSet& out, BudgetGuard* guard) {
  const auto args = t.args();
  const std::size_t k = args.size();
  const Axioms ax = t.axioms();
  if (ax.assoc && ax.comm) {
    for_each_proper_subset(k, [&](const std::vector<char>& keep) {
      if (guard) guard->tick();
      out.insert(rebuild(t, pick(args, keep, true)));
      return false;
    });
  } else if (ax.assoc) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        if (i == 0 && j + 1 == k) continue;
        std::vector<FlatTerm> rest(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(i));
        rest.insert(rest.end(), args.begin() + static_cast<std::ptrdiff_t>(j + 1), args.end());
        if (guard) guard->tick();
        out.insert(rebuild(t, std::move(rest)));
      }
  } else {
    out.insert(args.begin(), args.end());
  }
}

void successors_into(const FlatTerm& t, FlatSet& out, BudgetGuard* guard) {
  if (t.is_leaf()) return;
  root_steps(t, out, guard);
  for (std::size_t i = 0; i < t.arity(); ++i) {
    FlatSet inner;
    successors_into(t.args()[i], inner, guard);
    for (const auto& s : inner) {
      std::vector<FlatTerm> args(t.args().begin(), t.args().end());
      args[i] = s;
      out.insert(rebuild(t, std::move(args)));
    }
  }
}

/// Depth-first proof search for ground goals.
class GoalSearch {
 public:
  GoalSearch(BudgetGuard& guard, Stats& stats) : guard_(guard), stats_(stats) {}

  bool prove(const FlatTerm& u, const FlatTerm& v) {
    ++stats_.recursive_calls;
    ++depth_;
    stats_.peak_frontier = std::max<std::uint64_t>(stats_.peak_frontier, depth_);
    const bool r = attempt(u, v);
    --depth_;
    return r;
  }

 private:
  void step() {
    guard_.tick();
    ++stats_.states_expanded;
  }

  bool alternative(std::initializer_list<std::pair<FlatTerm, FlatTerm>> goals) {
    step();
    for (const auto& [a, b] : goals)
      if (!prove(a, b)) return false;
    return true;
  }

  bool attempt(const FlatTerm& u, const FlatTerm& v) {
    if (u.is_leaf() && v.is_leaf()) return u == v;
    if (dive(u, v)) return true;
    if (!u.same_root(v) || u.is_leaf()) return false;
    return couple(u, v);
  }

  bool dive(const FlatTerm& u, const FlatTerm& v) {
    if (v.is_leaf()) return false;
    const Axioms ax = v.axioms();
    if (!ax.assoc) {
      for (const auto& vi : v.args())
        if (alternative({{u, vi}})) return true;
      return false;
    }
    return for_each_split(v, [&](const FlatTerm& left, const FlatTerm& right) {
      return alternative({{u, left}}) || alternative({{u, right}});
    });
  }

  bool couple(const FlatTerm& u, const FlatTerm& v) {
    const Axioms ax = u.axioms();
    if (ax.assoc) {
      return for_each_split(u, [&](const FlatTerm& u1, const FlatTerm& u2) {
        return for_each_split(v, [&](const FlatTerm& v1, const FlatTerm& v2) {
          return alternative({{u1, v1}, {u2, v2}});
        });
      });
    }
    if (u.arity() != v.arity()) return false;
    if (ax.comm) {
      const auto a = u.args(), b = v.args();
      return alternative({{a[0], b[0]}, {a[1], b[1]}}) ||
             alternative({{a[0], b[1]}, {a[1], b[0]}});
    }
    step();
    for (std::size_t i = 0; i < u.arity(); ++i)
      if (!prove(u.args()[i], v.args()[i])) return false;
    return true;
  }

  // Every way of matching f(T1,T2) against `t`: contiguous splits for A,
  // ordered bipartitions for AC. Stops at the first split `fn` accepts.
  template <class Fn>
  static bool for_each_split(const FlatTerm& t, Fn fn) {
    const auto args = t.args();
    const std::size_t k = args.size();
    if (t.axioms().comm) {
      return for_each_proper_subset(k, [&](const std::vector<char>& in) {
        return fn(rebuild(t, pick(args, in, true)), rebuild(t, pick(args, in, false)));
      });
    }
    for (std::size_t j = 1; j < k; ++j) {
      std::vector<FlatTerm> l(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(j));
      std::vector<FlatTerm> r(args.begin() + static_cast<std::ptrdiff_t>(j), args.end());
      if (fn(rebuild(t, std::move(l)), rebuild(t, std::move(r)))) return true;
    }
    return false;
  }

  BudgetGuard& guard_;
  Stats& stats_;
  std::uint64_t depth_ = 0;
};

template <class Body>
Verdict timed(const Budget& budget, Body body) {
  Verdict v;
  BudgetGuard guard(budget);
  try {
    v.outcome = body(guard, v.stats) ? Outcome::True : Outcome::False;
  } catch (const BudgetExhausted&) {
    v.outcome = Outcome::Timeout;
  }
  v.stats.wall_time = guard.elapsed();
  return v;
}

std::vector<FlatTerm> successors_sorted(const FlatTerm& t, BudgetGuard* guard) {
  FlatSet set;
  successors_into(t, set, guard);
  std::vector<FlatTerm> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), FlatLess{});
  return out;
}

}  // namespace

std::vector<FlatTerm> one_step_successors(const FlatTerm& t) { return successors_sorted(t, nullptr); }

Verdict embeds_naive(const EmbedGoal& goal, const Budget& budget) {
  const FlatTerm target = ground_flat(goal.lhs, goal.sig);
  const FlatTerm start = ground_flat(goal.rhs, goal.sig);
  return timed(budget, [&](BudgetGuard& guard, Stats& stats) {
    if (start == target) return true;
    if (start.binary_size() <= target.binary_size()) return false;
    std::deque<FlatTerm> frontier{start};
    FlatSet visited{start};
    while (!frontier.empty()) {
      stats.peak_frontier = std::max<std::uint64_t>(stats.peak_frontier, frontier.size());
      const FlatTerm cur = std::move(frontier.front());
      frontier.pop_front();
      guard.tick();
      ++stats.states_expanded;
      for (auto& next : successors_sorted(cur, &guard)) {
        if (next == target) return true;
        // Every step shrinks the term, so states no larger than the target
        // can never reach it.
        if (next.binary_size() <= target.binary_size()) continue;
        if (visited.insert(next).second) frontier.push_back(std::move(next));
      }
    }
    return false;
  });
}

Verdict embeds_rogd(const EmbedGoal& goal, const Budget& budget) {
  const FlatTerm u = ground_flat(goal.lhs, goal.sig);
  const FlatTerm v = ground_flat(goal.rhs, goal.sig);
  return timed(budget, [&](BudgetGuard& guard, Stats& stats) {
    return GoalSearch(guard, stats).prove(u, v);
  });
}

}  // namespace hemb
