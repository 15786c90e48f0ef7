// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "hemb/rewrite_theory.hpp"
#include "support.hpp"

using namespace hemb;
using namespace hemb::testing;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("[%s] C%d %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool has_ac(const Term& t, const Signature& sig) {
  if (t.is_var()) return false;
  if (t.arity() > 0 && sig.axioms(t.name()).is_ac()) return true;
  for (const auto& a : t.args())
    if (has_ac(a, sig)) return true;
  return false;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void c1_worked_examples() {
  const Signature nat = fixture("nat-digits.fmod");
  const Signature pf = fixture("peano-free.fmod");
  const std::vector<EmbedGoal> goals{
      {T("+(1,X:Nat)", nat), T("+(Y:Nat,+(1,3))", nat), nat},
      {T("+(1,2)", nat), T("+(2,+(3,1))", nat), nat},
      {T("+(1,+(2,3))", nat), T("+(+(4,2),+(3,1))", nat), nat},
      {T("+(2,1)", nat), T("+(1,+(0,+(3,2)))", nat), nat},
      {T("*(s(X:Nat),s(Y:Nat))", pf), T("*(s(+(0,s(X:Nat))),s(+(X:Nat,Y:Nat)))", pf), pf}};
  std::size_t ok = 0, total = 0;
  double worst = 0.0;
  std::string misses;
  for (std::size_t i = 0; i < goals.size(); ++i)
    for (Engine e : all_engines()) {
      ++total;
      const auto t0 = Clock::now();
      const bool holds = run_engine(e, goals[i]).holds();
      const double ms = ms_since(t0);
      worst = std::max(worst, ms);
      if (holds && ms < 1000.0) ++ok;
      else misses += " goal" + std::to_string(i + 1) + "/" + to_string(e);
    }
  std::ostringstream d;
  d << ok << "/" << total << " (goal, engine) runs true within 1 s, slowest " << worst << " ms"
    << misses;
  report(1, "worked example goals", ok == total, d.str());
}

struct SuiteResult {
  std::vector<EmbedGoal> goals;
  std::vector<bool> oracle;
};

void c2_oracle_equivalence(const SuiteResult& suite) {
  const auto t0 = Clock::now();
  std::ostringstream d;
  bool all = true;
  for (Engine e : {Engine::Naive, Engine::Rogd, Engine::Ml, Engine::Sml}) {
    std::size_t agree = 0;
    for (std::size_t i = 0; i < suite.goals.size(); ++i)
      if (run_engine(e, suite.goals[i]).holds() == suite.oracle[i]) ++agree;
    all = all && agree == suite.goals.size();
    d << to_string(e) << " " << agree << "/" << suite.goals.size() << ", ";
  }
  const double ms = ms_since(t0);
  d << "engines " << ms / 1000.0 << " s";
  report(2, "oracle equivalence", all && ms < 5 * 60 * 1000.0, d.str());
}

void c3_combinatorics() {
  const Signature nat = fixture("nat-digits.fmod");
  bool ok = true;
  std::ostringstream d;
  std::string sum = "1";
  d << "successors";
  for (int k = 2; k <= 6; ++k) {
    sum = "+(" + std::to_string(k) + "," + sum + ")";
    const auto n = one_step_successors(flatten(sharp_u(T(sum, nat)), nat)).size();
    ok = ok && n == (std::size_t{1} << k) - 2;
    d << " k=" << k << ":" << n;
  }
  const auto two = enumerate_class(T("+(1,2)", nat), nat).size();
  ok = ok && two == 2;
  d << "; |class(+(1,2))|=" << two;
  const std::vector<std::vector<std::string>> triples{
      {"1", "2", "3"}, {"1", "1", "2"}, {"4", "4", "4"}, {"X:Nat", "suc(0)", "2"},
      {"suc(+(1,2))", "0", "Y:Nat"}};
  std::size_t matched = 0;
  for (const auto& tr : triples) {
    std::vector<Term> leaves;
    for (const auto& s : tr) leaves.push_back(T(s, nat));
    const Term t = Term::app("+", {leaves[0], Term::app("+", {leaves[1], leaves[2]})});
    std::set<std::string> lib;
    for (const auto& m : enumerate_class(t, nat)) lib.insert(m.str());
    std::set<std::string> brute;
    // Inner sums like +(1,2) inside suc are themselves permutable.
    for (const auto& top : all_binary_trees("+", leaves))
      for (const auto& m : closure_class(T(top, nat), nat)) brute.insert(m);
    if (lib == brute) ++matched;
  }
  ok = ok && matched == triples.size();
  d << "; 3-addend classes matching brute force " << matched << "/" << triples.size();
  report(3, "combinatorics", ok, d.str());
}

void c4_theory_generation() {
  const Signature nat = fixture("nat.fmod");
  std::ostringstream rogd, emb;
  const auto r = gen_rogd_rules(nat);
  const auto e = gen_emb_rules(nat);
  print_theory(rogd, r);
  print_theory(emb, e);
  const std::string dir = std::string(HEMB_FIXTURES) + "/golden/";
  const bool rogd_ok = rogd.str() == read_file(dir + "nat.rogd.txt");
  const bool emb_ok = emb.str() == read_file(dir + "nat.emb.txt");
  std::size_t diving = 0, base = 0, merged = 0;
  for (const auto& rule : r.rules) {
    if (rule.label == "Diving") ++diving;
    else if (rule.label == "Coupling" && rule.subgoals.size() <= 1) ++base;
    else if (rule.label.rfind("Coupling_", 0) == 0) ++merged;
  }
  const bool shape = r.rules.size() == 6 && diving == 2 && base == 3 && merged == 1 &&
                     e.rules.size() == 2;
  std::ostringstream d;
  d << "rogd " << r.rules.size() << " rules (" << diving << " Diving, " << base
    << " base Coupling, " << merged << " merged), golden " << (rogd_ok ? "match" : "MISMATCH")
    << "; emb " << e.rules.size() << " rules, golden " << (emb_ok ? "match" : "MISMATCH");
  report(4, "theory generation", rogd_ok && emb_ok && shape, d.str());
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

void c5_performance() {
  const auto t0 = Clock::now();
  const Signature sig = fixture("nat-digits.fmod");
  GenSpec spec;
  spec.mix = SymbolMix::all_of(sig);
  spec.seed = 42;
  spec.t1_depth = 5;
  spec.t2_depths = {5, 10};
  spec.goals_per_depth = 5;
  spec.side_depth = 4;
  const auto goals = gen_false_goals(spec, sig);
  const double inf = std::numeric_limits<double>::infinity();

  // Per engine and depth: median over goals of the per-goal median time.
  std::map<std::pair<Engine, std::size_t>, std::vector<double>> times;
  std::size_t anomalies = 0;
  for (Engine e : {Engine::Sml, Engine::Ml, Engine::Rogd, Engine::Naive}) {
    BenchConfig cfg;
    cfg.engines = {e};
    cfg.budget = Budget::millis(60'000);
    cfg.reps = (e == Engine::Ml || e == Engine::Sml) ? 10 : 1;
    for (const auto& row : run_bench(sig, goals, cfg)) {
      const std::size_t depth = row.t2_ot;
      const double t = row.outcome == Outcome::Timeout ? inf : row.time_ms;
      times[{e, depth}].push_back(t);
      if (depth == 5 && row.outcome == Outcome::Timeout) ++anomalies;
      if (row.outcome == Outcome::True) ++anomalies;
    }
  }
  auto med = [&](Engine e) { return median_of(times[{e, 10}]); };
  const double sml = med(Engine::Sml), ml = med(Engine::Ml);
  const double rogd = med(Engine::Rogd), naive = med(Engine::Naive);
  auto slow = [&](double x) { return x == inf || x >= 100.0 * ml; };
  const bool ok = sml <= ml && slow(rogd) && slow(naive) && anomalies == 0;
  auto fmt = [](double x) {
    std::ostringstream o;
    if (x == std::numeric_limits<double>::infinity()) o << "timeout";
    else o << x << " ms";
    return o.str();
  };
  std::ostringstream d;
  d << "T2 depth 10 medians: sml " << fmt(sml) << ", ml " << fmt(ml) << ", rogd " << fmt(rogd)
    << " (" << (rogd == inf ? "timeout" : std::to_string(rogd / ml) + "x ml") << "), naive "
    << fmt(naive) << " (" << (naive == inf ? "timeout" : std::to_string(naive / ml) + "x ml")
    << "); depth-5 timeouts or true outcomes " << anomalies << "; total " << ms_since(t0) / 1000.0
    << " s";
  report(5, "performance ordering", ok && ms_since(t0) < 30 * 60 * 1000.0, d.str());
}

void c6_strict_vs_short_circuit(const SuiteResult& suite) {
  std::size_t same_verdict = 0, dominated = 0, strict_ac = 0;
  for (const auto& g : suite.goals) {
    const FlatTerm s = to_meta(g.lhs, g.sig), t = to_meta(g.rhs, g.sig);
    const auto ml = embeds_ml(s, t), sml = embeds_sml(s, t);
    if (ml.holds == sml.holds) ++same_verdict;
    if (sml.counter.dominated_by(ml.counter)) ++dominated;
    const bool fewer = sml.counter.embed_calls + sml.counter.helper_calls <
                       ml.counter.embed_calls + ml.counter.helper_calls;
    if (fewer && (has_ac(g.lhs, g.sig) || has_ac(g.rhs, g.sig))) ++strict_ac;
  }
  const std::size_t n = suite.goals.size();
  std::ostringstream d;
  d << "same verdict " << same_verdict << "/" << n << ", sml counters <= ml " << dominated << "/"
    << n << ", strictly fewer calls on " << strict_ac << " AC goals";
  report(6, "strict vs short-circuit", same_verdict == n && dominated == n && strict_ac > 0,
         d.str());
}

// Random axiom-free term with exactly `size` symbols.
Term sized_term(std::size_t size, Rng& rng) {
  if (size == 1) return rng() % 4 ? Term::app("0") : Term::var("X", "Nat");
  if (size == 2 || rng() % 3 == 0) return Term::app("s", {sized_term(size - 1, rng)});
  const std::size_t left = 1 + rng() % (size - 2);
  return Term::app(rng() % 2 ? "+" : "*", {sized_term(left, rng), sized_term(size - 1 - left, rng)});
}

void c7_syntactic_scaling() {
  const Signature pf = fixture("peano-free.fmod");
  Rng rng(42);
  const Term t2 = sized_term(10'000, rng);
  GenSpec spec;
  spec.mix = SymbolMix::all_of(pf);
  const std::vector<Term> lhs{gen_term(spec, pf), T("*(s(X:Nat),s(Y:Nat))", pf),
                              T("s(s(s(s(s(s(s(s(s(s(s(s(0))))))))))))", pf)};
  double worst = 0.0;
  std::ostringstream d;
  d << "|T2| = " << t2.size() << ", depth " << t2.depth() << ";";
  for (const auto& t1 : lhs)
    for (Engine e : {Engine::Ml, Engine::Sml}) {
      const auto t0 = Clock::now();
      const Verdict v = run_engine(e, {t1, t2, pf});
      const double ms = ms_since(t0);
      worst = std::max(worst, ms);
      d << " " << to_string(e) << " " << to_string(v.outcome) << " " << ms << " ms";
    }
  report(7, "syntactic scaling", worst < 1500.0, d.str());
}

void c8_structural_parity() {
  const auto& table = equation_table();
  std::set<std::string_view> names;
  for (const auto& e : table) names.insert(e.name);
  std::ostringstream d;
  d << table.size() << " equations, " << names.size() << " distinct names";
  report(8, "structural parity", table.size() == 21 && names.size() == 21, d.str());
}

void c9_properties() {
  const std::vector<std::pair<std::string, std::function<std::size_t()>>> props{
      {"canonical", [] { return prop_canonical_idempotence(901); }},
      {"eq_mod_b", [] { return prop_eq_mod_b_laws(902); }},
      {"lemma1", [] { return prop_lemma1(903); }},
      {"sharp", [] { return prop_sharp(904); }},
      {"order", [] { return prop_embedding_order(905); }},
      {"all_A", [] { return prop_all_a_greedy(906); }},
      {"all_AC", [] { return prop_all_ac_permutation(907); }},
      {"pigeonhole", [] { return prop_whistle_pigeonhole(908); }}};
  std::size_t bad_total = 0;
  std::ostringstream d;
  for (const auto& [name, run] : props) {
    const std::size_t bad = run();
    bad_total += bad;
    d << name << "=" << bad << " ";
  }
  d << "violations";
  report(9, "property suites", bad_total == 0, d.str());
}

}  // namespace

int main() {
  c1_worked_examples();

  SuiteResult suite;
  suite.goals = goal_suite(suite_fixtures(), 334, 2024);
  for (const auto& g : suite.goals) suite.oracle.push_back(oracle_embeds(g));
  c2_oracle_equivalence(suite);
  c3_combinatorics();
  c4_theory_generation();
  c5_performance();
  c6_strict_vs_short_circuit(suite);
  c7_syntactic_scaling();
  c8_structural_parity();
  c9_properties();

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
