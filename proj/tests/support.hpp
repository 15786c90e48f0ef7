#pragma once

// Test-side oracles, fixtures and property checks shared by the unit tests
// and the acceptance runner. Nothing here reuses the library's class builder,
// successor generator or matcher.

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "hemb/bench.hpp"
#include "hemb/engine.hpp"
#include "hemb/flat_term.hpp"
#include "hemb/meta_embed.hpp"
#include "hemb/parser.hpp"
#include "hemb/search.hpp"
#include "hemb/syntactic.hpp"
#include "hemb/term_class.hpp"
#include "hemb/whistle.hpp"

namespace hemb::testing {

inline Signature fixture(const std::string& name) {
  return load_signature(std::string(HEMB_FIXTURES) + "/" + name);
}

inline Term T(const std::string& text, const Signature& sig) { return parse_term(text, sig); }

inline std::vector<Term> rebuild_at(const Term& t, std::size_t i, const Term& arg) {
  std::vector<Term> args(t.args().begin(), t.args().end());
  args[i] = arg;
  return args;
}

/// Terms reachable from `t` by one axiom step at any position:
/// f(a,b) -> f(b,a) for commutative f, and both rotations of
/// f(f(a,b),c) = f(a,f(b,c)) for associative f.
inline std::vector<Term> axiom_neighbours(const Term& t, const Signature& sig) {
  std::vector<Term> out;
  if (t.is_var() || t.arity() == 0) return out;
  const Axioms ax = sig.axioms(t.name());
  const auto a = t.args();
  if (ax.comm) out.push_back(Term::app(t.name(), {a[1], a[0]}));
  if (ax.assoc) {
    if (!a[0].is_var() && a[0].name() == t.name() && a[0].arity() == 2)
      out.push_back(Term::app(t.name(), {a[0].args()[0],
                                         Term::app(t.name(), {a[0].args()[1], a[1]})}));
    if (!a[1].is_var() && a[1].name() == t.name() && a[1].arity() == 2)
      out.push_back(Term::app(t.name(), {Term::app(t.name(), {a[0], a[1].args()[0]}),
                                         a[1].args()[1]}));
  }
  for (std::size_t i = 0; i < t.arity(); ++i)
    for (const auto& n : axiom_neighbours(a[i], sig))
      out.push_back(Term::app(t.name(), rebuild_at(t, i, n)));
  return out;
}

/// B-equivalence class by closure under single axiom steps.
inline std::set<std::string> closure_class(const Term& t, const Signature& sig) {
  std::set<std::string> seen{t.str()};
  std::deque<Term> todo{t};
  while (!todo.empty()) {
    const Term cur = todo.front();
    todo.pop_front();
    for (auto& n : axiom_neighbours(cur, sig))
      if (seen.insert(n.str()).second) todo.push_back(std::move(n));
  }
  return seen;
}

/// Every binary tree over the given leaves in every leaf order.
inline std::set<std::string> all_binary_trees(const std::string& op, std::vector<Term> leaves) {
  std::set<std::string> out;
  std::function<std::vector<Term>(std::size_t, std::size_t)> shapes =
      [&](std::size_t lo, std::size_t hi) -> std::vector<Term> {
    if (hi - lo == 1) return {leaves[lo]};
    std::vector<Term> r;
    for (std::size_t m = lo + 1; m < hi; ++m)
      for (const auto& l : shapes(lo, m))
        for (const auto& rr : shapes(m, hi)) r.push_back(Term::app(op, {l, rr}));
    return r;
  };
  std::sort(leaves.begin(), leaves.end(),
            [](const Term& a, const Term& b) { return a.str() < b.str(); });
  do {
    for (const auto& t : shapes(0, leaves.size())) out.insert(t.str());
  } while (std::next_permutation(leaves.begin(), leaves.end(), [](const Term& a, const Term& b) {
    return a.str() < b.str();
  }));
  return out;
}

/// All syntactic one-step projections f(..., ti, ...) -> ti at any position.
inline std::vector<Term> syntactic_projections(const Term& t) {
  std::vector<Term> out;
  if (t.is_var()) return out;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    out.push_back(t.args()[i]);
    for (const auto& s : syntactic_projections(t.args()[i]))
      out.push_back(Term::app(t.name(), rebuild_at(t, i, s)));
  }
  return out;
}

/// Projection successors modulo B computed from the class: canonical forms
/// of every syntactic projection of every class member.
inline std::set<std::string> successors_via_class(const Term& ground, const Signature& sig) {
  std::set<std::string> out;
  for (const auto& member : enumerate_class(ground, sig))
    for (const auto& s : syntactic_projections(member)) out.insert(flatten(s, sig).str());
  return out;
}

inline Term sharp_u(const Term& t) { return sharp(to_universal(t)); }

inline bool small_class(const Term& t, const Signature& sig, std::size_t limit) {
  try {
    return class_size(sharp_u(t), sig, limit) <= limit;
  } catch (const ClassCapExceeded&) {
    return false;
  }
}

/// The randomized small-goal suite: goals over the given fixtures with
/// term depths 1..4 and class sizes at most 200.
inline std::vector<EmbedGoal> goal_suite(const std::vector<std::string>& fixtures,
                                         std::size_t per_fixture, std::uint64_t seed) {
  std::vector<EmbedGoal> out;
  Rng rng(seed);
  for (const auto& name : fixtures) {
    const Signature sig = fixture(name);
    GenSpec spec;
    spec.mix = SymbolMix::all_of(sig);
    spec.side_depth = 2;
    spec.var_ratio = 0.2;
    std::size_t made = 0;
    while (made < per_fixture) {
      const std::size_t d1 = 1 + rng() % 4, d2 = 1 + rng() % 4;
      Term a = gen_term(spec, sig, d1, rng), b = gen_term(spec, sig, d2, rng);
      if (!small_class(a, sig, 200) || !small_class(b, sig, 200)) continue;
      out.push_back({std::move(a), std::move(b), sig});
      ++made;
    }
  }
  return out;
}

inline const std::vector<std::string>& suite_fixtures() {
  static const std::vector<std::string> v{"nat.fmod", "nat-digits.fmod", "natlist.fmod"};
  return v;
}

inline std::vector<Term> random_terms(const Signature& sig, std::size_t n, std::size_t max_depth,
                                      std::uint64_t seed, double var_ratio = 0.2) {
  GenSpec spec;
  spec.mix = SymbolMix::all_of(sig);
  spec.side_depth = 2;
  spec.var_ratio = var_ratio;
  Rng rng(seed);
  std::vector<Term> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(gen_term(spec, sig, 1 + rng() % max_depth, rng));
  return out;
}

/// Random re-association and argument swaps that stay inside the class.
inline Term scramble(const Term& t, const Signature& sig, Rng& rng, std::size_t steps = 8) {
  Term cur = t;
  for (std::size_t i = 0; i < steps; ++i) {
    const auto n = axiom_neighbours(cur, sig);
    if (n.empty()) break;
    cur = n[rng() % n.size()];
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Property checks. Each returns the number of violating samples.

inline std::size_t prop_canonical_idempotence(std::uint64_t seed) {
  std::size_t bad = 0;
  for (const auto& name : suite_fixtures()) {
    const Signature sig = fixture(name);
    Rng rng(seed);
    for (const auto& t : random_terms(sig, 300, 5, seed)) {
      const FlatTerm f = flatten(t, sig);
      if (!(flatten(unflatten(f), sig) == f)) ++bad;
      if (!(flatten(scramble(t, sig, rng), sig) == f)) ++bad;
    }
  }
  return bad;
}

inline std::size_t prop_eq_mod_b_laws(std::uint64_t seed) {
  std::size_t bad = 0;
  for (const auto& name : suite_fixtures()) {
    const Signature sig = fixture(name);
    Rng rng(seed);
    const auto ts = random_terms(sig, 200, 4, seed, 0.0);
    for (const auto& t : ts) {
      const Term u = scramble(t, sig, rng), w = scramble(u, sig, rng);
      if (!eq_mod_b(t, t, sig)) ++bad;
      if (eq_mod_b(t, u, sig) != eq_mod_b(u, t, sig)) ++bad;
      if (eq_mod_b(t, u, sig) && eq_mod_b(u, w, sig) && !eq_mod_b(t, w, sig)) ++bad;
      const Term& other = ts[rng() % ts.size()];
      if (eq_mod_b(t, other, sig) != eq_mod_b(other, t, sig)) ++bad;
    }
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      if (!small_class(ts[i], sig, 200)) continue;
      const auto cls = enumerate_class(ts[i], sig);
      std::set<std::string> members;
      for (const auto& m : cls) members.insert(m.str());
      const Term& probe = (i % 2) ? ts[i + 1] : scramble(ts[i], sig, rng);
      if (eq_mod_b(ts[i], probe, sig) != members.count(probe.str()) > 0) ++bad;
    }
  }
  return bad;
}

inline std::size_t prop_term_order_total(std::uint64_t seed) {
  std::size_t bad = 0;
  const Signature sig = fixture("natlist.fmod");
  const auto ts = random_terms(sig, 150, 4, seed);
  std::vector<FlatTerm> fs;
  for (const auto& t : ts) fs.push_back(flatten(t, sig));
  Rng rng(seed);
  for (std::size_t i = 0; i < 2000; ++i) {
    const auto& a = fs[rng() % fs.size()];
    const auto& b = fs[rng() % fs.size()];
    const auto& c = fs[rng() % fs.size()];
    const auto ab = term_order(a, b), ba = term_order(b, a);
    if ((ab == 0) != (a == b)) ++bad;
    if ((ab < 0) != (ba > 0)) ++bad;
    if (ab < 0 && term_order(b, c) < 0 && !(term_order(a, c) < 0)) ++bad;
  }
  return bad;
}

inline std::size_t prop_sharp(std::uint64_t seed) {
  std::size_t bad = 0;
  for (const auto& name : suite_fixtures()) {
    const Signature sig = fixture(name);
    for (const auto& t : random_terms(sig, 200, 5, seed, 0.4)) {
      const Term s = sharp_u(t);
      if (!s.ground() || !(sharp(s) == s)) ++bad;
    }
  }
  return bad;
}

/// Lemma 1: the direct Variable-rule evaluation equals the `#` reduction.
inline std::size_t prop_lemma1(std::uint64_t seed) {
  std::size_t bad = 0;
  for (const auto& name : {"nat.fmod", "peano-free.fmod", "natlist.fmod"}) {
    const Signature sig = fixture(name);
    const auto ts = random_terms(sig, 120, 4, seed, 0.4);
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = 0; j < ts.size(); j += 7) {
        const Term s = to_universal(ts[i]), t = to_universal(ts[j]);
        if (embeds_var_rules(s, t) != embeds_var(ts[i], ts[j])) ++bad;
      }
  }
  return bad;
}

inline std::size_t prop_embedding_order(std::uint64_t seed) {
  std::size_t bad = 0;
  const Signature sig = fixture("natlist.fmod");
  const auto ts = random_terms(sig, 60, 4, seed, 0.3);
  Rng rng(seed);
  for (const auto& a : ts) {
    if (!embeds_var(a, a)) ++bad;
    const EmbedGoal refl{a, a, sig};
    if (!run_engine(Engine::Sml, refl).holds()) ++bad;
    // Monotonicity under a random context.
    const Term ctx = Term::app("suc", {Term::app("head", {a})});
    if (!embeds_var(a, ctx)) ++bad;
    for (const auto& b : ts) {
      if (!embeds_var(a, b)) continue;
      for (const auto& c : ts)
        if (embeds_var(b, c) && !embeds_var(a, c)) ++bad;
    }
  }
  // Transitivity of the modulo-B relation, with the oracle as reference.
  const Signature nat = fixture("nat-digits.fmod");
  const auto ns = random_terms(nat, 25, 3, seed + 1, 0.2);
  for (const auto& a : ns)
    for (const auto& b : ns) {
      if (!small_class(a, nat, 200) || !small_class(b, nat, 200)) continue;
      if (!oracle_embeds({a, b, nat})) continue;
      for (const auto& c : ns)
        if (small_class(c, nat, 200) && oracle_embeds({b, c, nat}) && !oracle_embeds({a, c, nat}))
          ++bad;
    }
  return bad;
}

inline std::vector<FlatTerm> draw(const std::vector<FlatTerm>& pool, std::size_t n, Rng& rng) {
  std::vector<FlatTerm> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(pool[rng() % pool.size()]);
  return out;
}

inline std::size_t prop_all_a_greedy(std::uint64_t seed) {
  std::size_t bad = 0;
  const Signature sig = fixture("nat-digits.fmod");
  const auto ts = random_terms(sig, 40, 3, seed, 0.2);
  std::vector<FlatTerm> pool;
  for (const auto& t : ts) pool.push_back(to_meta(t, sig));
  Rng rng(seed);
  for (std::size_t i = 0; i < 3000; ++i) {
    const auto l1 = draw(pool, rng() % 4, rng), l2 = draw(pool, rng() % 7, rng);
    if (all_a(l1, l2) != all_a_greedy(l1, l2)) ++bad;
  }
  return bad;
}

inline std::size_t prop_all_ac_permutation(std::uint64_t seed) {
  std::size_t bad = 0;
  const Signature sig = fixture("natlist.fmod");
  const auto ts = random_terms(sig, 40, 3, seed, 0.2);
  std::vector<FlatTerm> pool;
  for (const auto& t : ts) pool.push_back(to_meta(t, sig));
  Rng rng(seed);
  for (std::size_t i = 0; i < 2000; ++i) {
    const auto l1 = draw(pool, rng() % 4, rng);
    auto l2 = draw(pool, rng() % 6, rng);
    const bool base = all_ac(l1, l2);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(l2.begin(), l2.end(), rng);
      if (all_ac(l1, l2) != base) ++bad;
    }
  }
  return bad;
}

/// Bounded Kruskal: 1000-term sequences of ground NAT terms of size <= 6
/// always blow the whistle.
inline std::size_t prop_whistle_pigeonhole(std::uint64_t seed, std::size_t runs = 20) {
  const Signature sig = fixture("nat.fmod");
  std::size_t bad = 0;
  Rng rng(seed);
  // Uniform over shapes built bottom-up with at most 6 symbols.
  std::function<Term(std::size_t)> gen = [&](std::size_t budget) -> Term {
    if (budget <= 1) return Term::app("0");
    const auto choice = rng() % 3;
    if (choice == 0) return Term::app("0");
    if (choice == 1) return Term::app("suc", {gen(budget - 1)});
    if (budget < 3) return Term::app("suc", {gen(budget - 1)});
    const std::size_t left = 1 + rng() % (budget - 2);
    return Term::app("+", {gen(left), gen(budget - 1 - left)});
  };
  for (std::size_t r = 0; r < runs; ++r) {
    Whistle w(sig, Engine::Sml);
    bool blown = false;
    for (std::size_t i = 0; i < 1000 && !blown; ++i)
      blown = std::holds_alternative<Blow>(w.add(gen(1 + rng() % 6)));
    if (!blown) ++bad;
  }
  return bad;
}

}  // namespace hemb::testing
