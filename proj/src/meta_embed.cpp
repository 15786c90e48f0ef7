#include "hemb/meta_embed.hpp"

#include <optional>

namespace hemb {

const std::array<EquationInfo, kEquationCount>& equation_table() {
  static const std::array<EquationInfo, kEquationCount> table{{
      {Equation::SharpSharp, "sharp-sharp", "# <| # = true"},
      {Equation::AppSharp, "app-sharp", "F[TermList] <| # = false"},
      {Equation::DiveRootMismatch, "dive", "T <| F[TermList] = any(T, TermList) if root(T) =/= F"},
      {Equation::CoupleFree, "couple-free",
       "F[TermList1] <| F[TermList2] = any(F[TermList1], TermList2) or all(TermList1, TermList2)"},
      {Equation::CoupleC, "couple-c",
       "F[U,V] <| F[X,Y] = any(F[U,V], [X,Y]) or (U <| X and V <| Y) or (U <| Y and V <| X) "
       "if F is C"},
      {Equation::CoupleA, "couple-a",
       "F[TermList1] <| F[TermList2] = any(F[TermList1], TermList2) or all_A(TermList1, "
       "TermList2) if F is A"},
      {Equation::CoupleAC, "couple-ac",
       "F[TermList1] <| F[TermList2] = any(F[TermList1], TermList2) or all_AC(TermList1, "
       "TermList2) if F is AC"},
      {Equation::AnyNil, "any-nil", "any(U, nil) = false"},
      {Equation::AnyCons, "any-cons", "any(U, V : L) = U <| V or any(U, L)"},
      {Equation::AllNilNil, "all-nil-nil", "all(nil, nil) = true"},
      {Equation::AllMismatch, "all-mismatch", "all(nil, U : L) = false ; all(U : L, nil) = false"},
      {Equation::AllCons, "all-cons", "all(U : L1, V : L2) = U <| V and all(L1, L2)"},
      {Equation::AllANil, "all-a-nil", "all_A(nil, L) = true"},
      {Equation::AllAConsNil, "all-a-cons-nil", "all_A(U : L, nil) = false"},
      {Equation::AllAConsCons, "all-a-cons-cons",
       "all_A(U : L1, V : L2) = (U <| V and all_A(L1, L2)) or all_A(U : L1, L2)"},
      {Equation::AllACNil, "all-ac-nil", "all_AC(nil, L) = true"},
      {Equation::AllACCons, "all-ac-cons", "all_AC(U : L1, L2) = all_AC_Aux(U : L1, L2, L2)"},
      {Equation::AuxNil, "aux-nil", "all_AC_Aux(U : L1, nil, L3) = false"},
      {Equation::AuxCons, "aux-cons",
       "all_AC_Aux(U : L1, V : L2, L3) = (U <| V and all_AC(L1, remove(V, L3))) or "
       "all_AC_Aux(U : L1, L2, L3)"},
      {Equation::RemoveNil, "remove-nil", "remove(U, nil) = nil"},
      {Equation::RemoveCons, "remove-cons",
       "remove(U, V : L) = if U = V then L else V : remove(U, L)"},
  }};
  return table;
}

namespace {

using List = std::span<const FlatTerm>;

/// Direct evaluator of the equations. In strict mode both operands of every
/// `and` / `or` are evaluated, in short-circuit mode the second operand is
/// skipped once the first decides the result.
class MetaEval {
 public:
  MetaEval(MetaVariant v, BudgetGuard* guard) : strict_(v == MetaVariant::Strict), guard_(guard) {}

  bool embed(const FlatTerm& s, const FlatTerm& t) {
    ++c_.embed_calls;
    if (guard_) guard_->tick();
    if (s.is_sharp() && t.is_sharp()) return fire(Equation::SharpSharp, true);
    if (t.is_sharp()) return fire(Equation::AppSharp, false);
    if (!s.same_root(t)) {
      fire(Equation::DiveRootMismatch);
      return any(s, t.args());
    }
    const Axioms ax = t.axioms();
    if (ax.assoc && ax.comm) {
      fire(Equation::CoupleAC);
      return lor([&] { return any(s, t.args()); }, [&] { return all_ac(s.args(), t.args()); });
    }
    if (ax.assoc) {
      fire(Equation::CoupleA);
      return lor([&] { return any(s, t.args()); }, [&] { return all_a(s.args(), t.args()); });
    }
    if (ax.comm) {
      fire(Equation::CoupleC);
      const auto u = s.args(), x = t.args();
      return lor(
          [&] {
            return lor([&] { return any(s, x); },
                       [&] {
                         return land([&] { return embed(u[0], x[0]); },
                                     [&] { return embed(u[1], x[1]); });
                       });
          },
          [&] {
            return land([&] { return embed(u[0], x[1]); }, [&] { return embed(u[1], x[0]); });
          });
    }
    fire(Equation::CoupleFree);
    return lor([&] { return any(s, t.args()); }, [&] { return all(s.args(), t.args()); });
  }

  bool any(const FlatTerm& u, List l) {
    ++c_.helper_calls;
    if (l.empty()) return fire(Equation::AnyNil, false);
    fire(Equation::AnyCons);
    return lor([&] { return embed(u, l.front()); }, [&] { return any(u, l.subspan(1)); });
  }

  bool all(List l1, List l2) {
    ++c_.helper_calls;
    if (l1.empty() && l2.empty()) return fire(Equation::AllNilNil, true);
    if (l1.empty() || l2.empty()) return fire(Equation::AllMismatch, false);
    fire(Equation::AllCons);
    return land([&] { return embed(l1.front(), l2.front()); },
                [&] { return all(l1.subspan(1), l2.subspan(1)); });
  }

  bool all_a(List l1, List l2) {
    ++c_.helper_calls;
    if (l1.empty()) return fire(Equation::AllANil, true);
    if (l2.empty()) return fire(Equation::AllAConsNil, false);
    fire(Equation::AllAConsCons);
    return lor(
        [&] {
          return land([&] { return embed(l1.front(), l2.front()); },
                      [&] { return all_a(l1.subspan(1), l2.subspan(1)); });
        },
        [&] { return all_a(l1, l2.subspan(1)); });
  }

  bool all_ac(List l1, List l2) {
    ++c_.helper_calls;
    if (l1.empty()) return fire(Equation::AllACNil, true);
    fire(Equation::AllACCons);
    return aux(l1, l2, l2);
  }

  bool aux(List l1, List l2, List l3) {
    ++c_.helper_calls;
    if (l2.empty()) return fire(Equation::AuxNil, false);
    fire(Equation::AuxCons);
    return lor(
        [&] {
          return land([&] { return embed(l1.front(), l2.front()); },
                      [&] {
                        const std::vector<FlatTerm> rest = remove(l2.front(), l3);
                        return all_ac(l1.subspan(1), rest);
                      });
        },
        [&] { return aux(l1, l2.subspan(1), l3); });
  }

  // Iterative unfolding of the recursive `remove`: one RemoveCons step per
  // visited element, RemoveNil when the list runs out.
  std::vector<FlatTerm> remove(const FlatTerm& u, List l) {
    std::vector<FlatTerm> out;
    out.reserve(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      ++c_.helper_calls;
      fire(Equation::RemoveCons);
      if (l[i] == u) {
        out.insert(out.end(), l.begin() + static_cast<std::ptrdiff_t>(i + 1), l.end());
        return out;
      }
      out.push_back(l[i]);
    }
    ++c_.helper_calls;
    fire(Equation::RemoveNil);
    return out;
  }

  const CallCounter& counter() const { return c_; }

 private:
  template <class A, class B>
  bool lor(A a, B b) {
    const bool x = a();
    if (!strict_ && x) return true;
    const bool y = b();
    return x || y;
  }
  template <class A, class B>
  bool land(A a, B b) {
    const bool x = a();
    if (!strict_ && !x) return false;
    const bool y = b();
    return x && y;
  }

  bool fire(Equation e, bool r = false) {
    ++c_.fired[static_cast<std::size_t>(e)];
    return r;
  }

  bool strict_;
  BudgetGuard* guard_;
  CallCounter c_;
};

}  // namespace

FlatTerm to_meta(const Term& t, const Signature& sig) {
  return flatten(sharp(to_universal(t)), sig);
}

MetaResult embeds_meta(const FlatTerm& s, const FlatTerm& t, MetaVariant v, const Budget& budget) {
  std::optional<BudgetGuard> guard;
  if (budget.max_time) guard.emplace(Budget{budget.max_time, std::nullopt});
  MetaEval eval(v, guard ? &*guard : nullptr);
  MetaResult r;
  r.holds = eval.embed(s, t);
  r.counter = eval.counter();
  return r;
}

MetaResult embeds_ml(const FlatTerm& s, const FlatTerm& t) {
  return embeds_meta(s, t, MetaVariant::Strict);
}

MetaResult embeds_sml(const FlatTerm& s, const FlatTerm& t) {
  return embeds_meta(s, t, MetaVariant::ShortCircuit);
}

Verdict embeds_flat(const EmbedGoal& goal, MetaVariant v, const Budget& budget) {
  const auto start = std::chrono::steady_clock::now();
  const FlatTerm s = to_meta(goal.lhs, goal.sig);
  const FlatTerm t = to_meta(goal.rhs, goal.sig);
  Verdict out;
  try {
    const MetaResult r = embeds_meta(s, t, v, budget);
    out.outcome = r.holds ? Outcome::True : Outcome::False;
    out.stats.recursive_calls = r.counter.embed_calls + r.counter.helper_calls;
  } catch (const BudgetExhausted&) {
    out.outcome = Outcome::Timeout;
  }
  out.stats.wall_time = std::chrono::steady_clock::now() - start;
  return out;
}

bool all_a_greedy(List l1, List l2) {
  std::size_t j = 0;
  for (const auto& u : l1) {
    while (j < l2.size() && !embeds_sml(u, l2[j]).holds) ++j;
    if (j == l2.size()) return false;
    ++j;
  }
  return true;
}

bool all_a(List l1, List l2) { return MetaEval(MetaVariant::ShortCircuit, nullptr).all_a(l1, l2); }

bool all_ac(List l1, List l2) {
  return MetaEval(MetaVariant::ShortCircuit, nullptr).all_ac(l1, l2);
}

}  // namespace hemb
