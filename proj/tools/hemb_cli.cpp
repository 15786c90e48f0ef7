// Command-line front end: check, gen, class, succ, bench, whistle.
//
// Exit codes: 0 true / success, 1 false, 2 error, 3 timeout.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hemb/bench.hpp"
#include "hemb/engine.hpp"
#include "hemb/parser.hpp"
#include "hemb/rewrite_theory.hpp"
#include "hemb/search.hpp"
#include "hemb/term_class.hpp"
#include "hemb/whistle.hpp"

namespace {

using namespace hemb;

constexpr int kTrue = 0, kFalse = 1, kError = 2, kTimeout = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Engine engine_arg(const std::string& name) {
  if (auto e = parse_engine(name)) return *e;
  throw UsageError("unknown engine '" + name + "' (naive, rogd, ml, sml, oracle)");
}

Budget budget_arg(std::int64_t timeout_ms) {
  return timeout_ms > 0 ? Budget::millis(timeout_ms) : Budget::unbounded();
}

std::vector<std::size_t> depth_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v == 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad depth '" + item + "' in --t2-depths");
    }
  }
  if (out.empty()) throw UsageError("--t2-depths is empty");
  return out;
}

int run_check(const std::string& module, const std::string& engine, std::int64_t timeout_ms,
              const std::string& t1, const std::string& t2) {
  const Signature sig = load_signature(module);
  const EmbedGoal goal{parse_term(t1, sig), parse_term(t2, sig), sig};
  const Verdict v = run_engine(engine_arg(engine), goal, budget_arg(timeout_ms));
  std::cout << to_string(v.outcome) << '\n';
  switch (v.outcome) {
    case Outcome::True: return kTrue;
    case Outcome::False: return kFalse;
    case Outcome::Timeout: return kTimeout;
  }
  return kError;
}

int run_gen(const std::string& module, const std::string& kind) {
  const Signature sig = load_signature(module);
  if (kind == "emb") print_theory(std::cout, gen_emb_rules(sig));
  else if (kind == "rogd") print_theory(std::cout, gen_rogd_rules(sig));
  else throw UsageError("unknown theory kind '" + kind + "' (emb, rogd)");
  return kTrue;
}

int run_class(const std::string& module, const std::string& text) {
  const Signature sig = load_signature(module);
  const auto members = enumerate_class(parse_term(text, sig), sig);
  for (const auto& m : members) std::cout << m << '\n';
  std::cout << members.size() << " terms\n";
  return kTrue;
}

int run_succ(const std::string& module, const std::string& text) {
  const Signature sig = load_signature(module);
  const FlatTerm t = flatten(sharp(to_universal(parse_term(text, sig))), sig);
  const auto succ = one_step_successors(t);
  for (const auto& s : succ) std::cout << unflatten(s) << '\n';
  std::cout << succ.size() << " successors\n";
  return kTrue;
}

struct BenchArgs {
  std::string module, engines = "sml,ml", t2_depths = "5", csv;
  std::uint64_t seed = 42;
  std::size_t t1_depth = 5, reps = 10, goals = 1, side_depth = 2;
  std::int64_t timeout_ms = 60'000;
};

int run_bench_cmd(const BenchArgs& a) {
  const Signature sig = load_signature(a.module);
  BenchConfig cfg;
  std::stringstream ss(a.engines);
  for (std::string name; std::getline(ss, name, ',');)
    if (!name.empty()) cfg.engines.push_back(engine_arg(name));
  cfg.budget = Budget::millis(a.timeout_ms);
  cfg.reps = a.reps;
  GenSpec spec;
  spec.seed = a.seed;
  spec.t1_depth = a.t1_depth;
  spec.t2_depths = depth_list(a.t2_depths);
  spec.goals_per_depth = a.goals;
  spec.side_depth = a.side_depth;
  spec.mix = SymbolMix::all_of(sig);
  const auto rows = run_bench(sig, spec, cfg);
  if (a.csv.empty() || a.csv == "-") {
    write_csv(std::cout, rows);
  } else {
    std::ofstream out(a.csv);
    if (!out) throw std::runtime_error("cannot write " + a.csv);
    write_csv(out, rows);
    if (!out) throw std::runtime_error("write failed: " + a.csv);
  }
  return kTrue;
}

int run_whistle(const std::string& module, const std::string& engine, std::int64_t timeout_ms) {
  const Signature sig = load_signature(module);
  Whistle w(sig, engine_arg(engine), budget_arg(timeout_ms));
  for (std::string line; std::getline(std::cin, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto r = w.add(parse_term(line, sig));
    if (const auto* b = std::get_if<Blow>(&r)) {
      std::cout << "blow " << b->index << '\n';
      return kTrue;
    }
    std::cout << "pass\n";
  }
  return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homeomorphic embedding modulo associativity and commutativity"};
  app.require_subcommand(1);

  std::string module, engine = "sml", kind, t1, t2, term;
  std::int64_t timeout_ms = 0;

  auto* check = app.add_subcommand("check", "decide t1 <| t2");
  check->add_option("--module", module, "signature file")->required();
  check->add_option("--engine", engine, "naive, rogd, ml, sml or oracle");
  check->add_option("--timeout-ms", timeout_ms, "wall-clock budget, 0 = none");
  check->add_option("t1", t1)->required();
  check->add_option("t2", t2)->required();

  auto* gen = app.add_subcommand("gen", "print a generated rewrite theory");
  gen->add_option("--module", module)->required();
  gen->add_option("--kind", kind, "emb or rogd")->required();

  auto* cls = app.add_subcommand("class", "list the equivalence class of a term");
  cls->add_option("--module", module)->required();
  cls->add_option("term", term)->required();

  auto* succ = app.add_subcommand("succ", "one-step projection successors modulo axioms");
  succ->add_option("--module", module)->required();
  succ->add_option("term", term)->required();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "run engines on generated false goals");
  bench->add_option("--module", ba.module)->required();
  bench->add_option("--engines", ba.engines, "comma-separated engine list");
  bench->add_option("--seed", ba.seed);
  bench->add_option("--t1-depth", ba.t1_depth);
  bench->add_option("--t2-depths", ba.t2_depths, "comma-separated depths");
  bench->add_option("--timeout-ms", ba.timeout_ms);
  bench->add_option("--reps", ba.reps);
  bench->add_option("--goals", ba.goals, "goals per T2 depth");
  bench->add_option("--side-depth", ba.side_depth, "depth bound off the spine");
  bench->add_option("--csv", ba.csv, "output path, '-' for stdout");

  auto* whistle = app.add_subcommand("whistle", "read terms from stdin until one embeds an earlier one");
  whistle->add_option("--module", module)->required();
  whistle->add_option("--engine", engine);
  whistle->add_option("--timeout-ms", timeout_ms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*check) return run_check(module, engine, timeout_ms, t1, t2);
    if (*gen) return run_gen(module, kind);
    if (*cls) return run_class(module, term);
    if (*succ) return run_succ(module, term);
    if (*bench) return run_bench_cmd(ba);
    if (*whistle) return run_whistle(module, engine, timeout_ms);
  } catch (const WhistleTimeout& e) {
    std::cout << "timeout\n";
    std::cerr << "error: check against history[" << e.index() << "] timed out\n";
    return kTimeout;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
