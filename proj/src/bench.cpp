#include "hemb/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>

#include "hemb/flat_term.hpp"
#include "hemb/meta_embed.hpp"
#include "hemb/term_class.hpp"

namespace hemb {

SymbolMix SymbolMix::all_of(const Signature& sig) {
  SymbolMix m;
  for (const auto& op : sig.ops()) {
    if (op.arity() == 0) continue;
    if (op.axioms.is_ac()) ++m.ac;
    else if (op.axioms.is_a()) ++m.a;
    else if (op.axioms.is_c()) ++m.c;
    else ++m.free;
  }
  return m;
}

namespace {

class Generator {
 public:
  Generator(const GenSpec& spec, const Signature& sig) : spec_(spec), sig_(sig) {
    SymbolMix left = spec.mix;
    for (const auto& op : sig.ops()) {
      if (op.arity() == 0) {
        constants_.push_back(&op);
        continue;
      }
      std::size_t* budget = op.axioms.is_ac()  ? &left.ac
                            : op.axioms.is_a() ? &left.a
                            : op.axioms.is_c() ? &left.c
                                               : &left.free;
      if (*budget == 0) continue;
      --*budget;
      ops_.push_back(&op);
    }
    if (left.free || left.c || left.a || left.ac)
      throw GenError("signature " + sig.name + " lacks the requested operator mix");
  }

  Term term(std::size_t depth, Rng& rng) {
    if (depth == 0) throw GenError("term depth must be at least 1");
    std::vector<std::string> roots;
    for (const auto& s : sig_.poset().sorts())
      if (feasible(s, depth)) roots.push_back(s);
    if (roots.empty())
      throw GenError("no term of depth " + std::to_string(depth) + " over the requested mix");
    next_var_ = 0;
    return build(roots[pick(roots.size(), rng)], depth, rng);
  }

 private:
  static std::size_t pick(std::size_t n, Rng& rng) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  }

  std::vector<const OperatorDecl*> constants_of(const std::string& sort) const {
    std::vector<const OperatorDecl*> out;
    for (const auto* c : constants_)
      if (sig_.poset().leq(c->result_sort, sort)) out.push_back(c);
    return out;
  }

  std::size_t side_bound(std::size_t depth) const {
    return std::max<std::size_t>(1, std::min(spec_.side_depth, depth - 1));
  }

  bool leaf_feasible(const std::string& sort) const {
    return spec_.var_ratio > 0.0 || !constants_of(sort).empty();
  }

  // Some argument can carry the spine at depth-1 and every other argument
  // fits within the side bound.
  std::vector<std::size_t> spine_slots(const OperatorDecl& op, std::size_t depth) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < op.arity(); ++i) {
      if (!feasible(op.arg_sorts[i], depth - 1)) continue;
      bool rest_ok = true;
      for (std::size_t j = 0; j < op.arity() && rest_ok; ++j)
        if (j != i) rest_ok = leaf_feasible(op.arg_sorts[j]);
      if (rest_ok) out.push_back(i);
    }
    return out;
  }

  std::vector<const OperatorDecl*> ops_of(const std::string& sort, std::size_t depth) {
    std::vector<const OperatorDecl*> out;
    for (const auto* op : ops_)
      if (sig_.poset().leq(op->result_sort, sort) && !spine_slots(*op, depth).empty())
        out.push_back(op);
    return out;
  }

  bool feasible(const std::string& sort, std::size_t depth) {
    if (depth == 1) return leaf_feasible(sort);
    const auto key = std::make_pair(sort, depth);
    if (auto it = feasible_.find(key); it != feasible_.end()) return it->second;
    feasible_[key] = false;
    const bool r = !ops_of(sort, depth).empty();
    feasible_[key] = r;
    return r;
  }

  Term leaf(const std::string& sort, Rng& rng) {
    const auto cs = constants_of(sort);
    const bool var = cs.empty() || std::bernoulli_distribution(spec_.var_ratio)(rng);
    if (var) return Term::var("X" + std::to_string(++next_var_), sort);
    return Term::app(cs[pick(cs.size(), rng)]->name, {});
  }

  // A term of depth at most `bound`, used off the spine.
  Term side(const std::string& sort, std::size_t bound, Rng& rng) {
    std::vector<std::size_t> depths;
    for (std::size_t d = 1; d <= bound; ++d)
      if (feasible(sort, d)) depths.push_back(d);
    return build(sort, depths[pick(depths.size(), rng)], rng);
  }

  Term build(const std::string& sort, std::size_t depth, Rng& rng) {
    if (depth == 1) return leaf(sort, rng);
    const auto ops = ops_of(sort, depth);
    const OperatorDecl& op = *ops[pick(ops.size(), rng)];
    const auto slots = spine_slots(op, depth);
    const std::size_t spine = slots[pick(slots.size(), rng)];
    std::vector<Term> args;
    for (std::size_t i = 0; i < op.arity(); ++i)
      args.push_back(i == spine ? build(op.arg_sorts[i], depth - 1, rng)
                                : side(op.arg_sorts[i], side_bound(depth), rng));
    return Term::app(op.name, std::move(args));
  }

  const GenSpec& spec_;
  const Signature& sig_;
  std::vector<const OperatorDecl*> constants_;
  std::vector<const OperatorDecl*> ops_;
  std::map<std::pair<std::string, std::size_t>, bool> feasible_;
  std::size_t next_var_ = 0;
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

}  // namespace

Term gen_term(const GenSpec& spec, const Signature& sig, std::size_t depth, Rng& rng) {
  return Generator(spec, sig).term(depth, rng);
}

Term gen_term(const GenSpec& spec, const Signature& sig) {
  Rng rng(spec.seed);
  return gen_term(spec, sig, spec.t1_depth, rng);
}

std::vector<BenchGoal> gen_false_goals(const GenSpec& spec, const Signature& sig) {
  Generator gen(spec, sig);
  Rng rng(spec.seed);
  std::vector<BenchGoal> out;
  for (std::size_t depth : spec.t2_depths) {
    for (std::size_t g = 0; g < spec.goals_per_depth; ++g) {
      bool found = false;
      for (std::size_t attempt = 0; attempt < spec.max_resample && !found; ++attempt) {
        Term t1 = gen.term(spec.t1_depth, rng);
        Term t2 = gen.term(depth, rng);
        if (embeds_sml(to_meta(t1, sig), to_meta(t2, sig)).holds) continue;
        out.push_back({out.size(), std::move(t1), std::move(t2)});
        found = true;
      }
      if (!found)
        throw GenError("no false goal found for T2 depth " + std::to_string(depth) + " after " +
                       std::to_string(spec.max_resample) + " attempts");
    }
  }
  return out;
}

std::size_t original_depth(const Term& t) { return t.depth(); }

std::size_t flat_depth(const Term& t, const Signature& sig) { return flatten(t, sig).depth(); }

std::vector<BenchRow> run_bench(const Signature& sig, const std::vector<BenchGoal>& goals,
                                const BenchConfig& cfg) {
  std::vector<BenchRow> rows;
  for (Engine e : cfg.engines) {
    for (const auto& g : goals) {
      BenchRow row;
      row.engine = e;
      row.goal_id = g.id;
      row.t1_ot = original_depth(g.t1);
      row.t1_ft = flat_depth(g.t1, sig);
      row.t2_ot = original_depth(g.t2);
      row.t2_ft = flat_depth(g.t2, sig);
      const EmbedGoal goal{g.t1, g.t2, sig};
      std::vector<double> times;
      for (std::size_t r = 0; r < std::max<std::size_t>(1, cfg.reps); ++r) {
        Verdict v;
        try {
          v = run_engine(e, goal, cfg.budget);
        } catch (const ClassCapExceeded&) {
          v.outcome = Outcome::Timeout;
        }
        times.push_back(v.stats.millis());
        row.outcome = v.outcome;
        row.states = v.stats.states_expanded;
        row.calls = v.stats.recursive_calls;
        if (v.outcome == Outcome::Timeout) break;
      }
      row.time_ms = median(times);
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<BenchRow> run_bench(const Signature& sig, const GenSpec& spec,
                                const BenchConfig& cfg) {
  if (cfg.engines.empty()) return {};
  return run_bench(sig, gen_false_goals(spec, sig), cfg);
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "engine,goal_id,t1_ot,t1_ft,t2_ot,t2_ft,outcome,time_ms,states,calls\n";
  for (const auto& r : rows) {
    os << to_string(r.engine) << ',' << r.goal_id << ',' << r.t1_ot << ',' << r.t1_ft << ','
       << r.t2_ot << ',' << r.t2_ft << ',' << to_string(r.outcome) << ',' << std::fixed
       << std::setprecision(3) << r.time_ms << ',' << r.states << ',' << r.calls << '\n';
    os.unsetf(std::ios::floatfield);
  }
}

}  // namespace hemb
