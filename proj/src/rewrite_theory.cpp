#include "hemb/rewrite_theory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace hemb {

namespace {

using Subst = std::map<std::string, FlatTerm>;
using Cont = std::function<bool(const Subst&)>;

bool match(const FlatTerm& p, const FlatTerm& s, const Subst& sigma, const Cont& k);

bool match_seq(std::span<const FlatTerm> ps, std::span<const FlatTerm> ss, const Subst& sigma,
               const Cont& k) {
  if (ps.empty()) return k(sigma);
  return match(ps.front(), ss.front(), sigma, [&](const Subst& s2) {
    return match_seq(ps.subspan(1), ss.subspan(1), s2, k);
  });
}

FlatTerm group_term(const FlatTerm& root, std::vector<FlatTerm> parts) {
  if (parts.size() == 1) return parts.front();
  return FlatTerm::make(root.symbol(), root.axioms(), std::move(parts));
}

// Splits `ss` into `ps.size()` nonempty contiguous blocks.
bool match_assoc(const FlatTerm& root, std::span<const FlatTerm> ps, std::span<const FlatTerm> ss,
                 const Subst& sigma, const Cont& k) {
  if (ps.empty()) return ss.empty() && k(sigma);
  if (ss.size() < ps.size()) return false;
  const std::size_t max_len = ss.size() - (ps.size() - 1);
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (ps.size() == 1 && len != ss.size()) continue;
    FlatTerm block = group_term(root, {ss.begin(), ss.begin() + static_cast<std::ptrdiff_t>(len)});
    if (match(ps.front(), block, sigma, [&](const Subst& s2) {
          return match_assoc(root, ps.subspan(1), ss.subspan(len), s2, k);
        }))
      return true;
  }
  return false;
}

// Distributes the subject arguments over `ps.size()` nonempty groups.
bool match_ac(const FlatTerm& root, std::span<const FlatTerm> ps, std::span<const FlatTerm> ss,
              const Subst& sigma, const Cont& k) {
  const std::size_t n = ps.size(), m = ss.size();
  if (m < n) return false;
  std::vector<std::size_t> group(m, 0);
  while (true) {
    std::vector<std::vector<FlatTerm>> parts(n);
    for (std::size_t i = 0; i < m; ++i) parts[group[i]].push_back(ss[i]);
    if (std::all_of(parts.begin(), parts.end(), [](const auto& v) { return !v.empty(); })) {
      std::vector<FlatTerm> terms;
      for (auto& p : parts) terms.push_back(group_term(root, std::move(p)));
      if (match_seq(ps, terms, sigma, k)) return true;
    }
    std::size_t i = 0;
    while (i < m && ++group[i] == n) group[i++] = 0;
    if (i == m) return false;
  }
}

bool match(const FlatTerm& p, const FlatTerm& s, const Subst& sigma, const Cont& k) {
  if (p.is_var()) {
    if (auto it = sigma.find(p.symbol()); it != sigma.end()) return it->second == s && k(sigma);
    Subst s2 = sigma;
    s2.emplace(p.symbol(), s);
    return k(s2);
  }
  if (!p.same_root(s)) return false;
  if (p.is_leaf()) return s.is_leaf() && k(sigma);
  const Axioms ax = p.axioms();
  if (ax.assoc && ax.comm) return match_ac(p, p.args(), s.args(), sigma, k);
  if (ax.assoc) return match_assoc(p, p.args(), s.args(), sigma, k);
  if (p.arity() != s.arity()) return false;
  if (ax.comm) {
    const FlatTerm swapped[2] = {s.args()[1], s.args()[0]};
    return match_seq(p.args(), s.args(), sigma, k) || match_seq(p.args(), swapped, sigma, k);
  }
  return match_seq(p.args(), s.args(), sigma, k);
}

FlatTerm substitute(const FlatTerm& p, const Subst& sigma) {
  if (p.is_var()) {
    auto it = sigma.find(p.symbol());
    return it == sigma.end() ? p : it->second;
  }
  if (p.is_leaf()) return p;
  std::vector<FlatTerm> args;
  for (const auto& a : p.args()) args.push_back(substitute(a, sigma));
  return FlatTerm::make(p.symbol(), p.axioms(), std::move(args));
}

// Free pairing node used to match several patterns with one substitution.
FlatTerm tuple(std::string tag, std::vector<FlatTerm> parts) {
  return FlatTerm::raw(std::move(tag), {}, std::move(parts));
}

FlatTerm rule_var(const std::string& name) { return FlatTerm::variable(name, kUniversalSort); }

std::vector<FlatTerm> vars(const std::string& prefix, std::size_t n, std::size_t from = 1,
                           const std::string& suffix = "") {
  std::vector<FlatTerm> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(rule_var(prefix + std::to_string(i + from) + suffix));
  return out;
}

FlatTerm app(const OperatorDecl& op, std::vector<FlatTerm> args) {
  if (args.empty()) return FlatTerm::leaf(op.name, op.axioms);
  return FlatTerm::make(op.name, op.axioms, std::move(args));
}

bool emb_instance_of(const RewriteRule& general, const RewriteRule& specific) {
  return match(tuple("->", {general.lhs, general.rhs}), tuple("->", {specific.lhs, specific.rhs}),
               {}, [](const Subst&) { return true; });
}

std::vector<std::pair<FlatTerm, FlatTerm>> goal_multiset(const std::vector<EmbedPattern>& gs) {
  std::vector<std::pair<FlatTerm, FlatTerm>> out;
  for (const auto& g : gs) out.emplace_back(g.lhs, g.rhs);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (auto c = term_order(a.first, b.first); c != 0) return c < 0;
    return term_order(a.second, b.second) < 0;
  });
  return out;
}

bool rogd_instance_of(const RewriteRule& general, const RewriteRule& specific) {
  if (general.subgoals.size() != specific.subgoals.size()) return false;
  const auto target = goal_multiset(specific.subgoals);
  return match(tuple("<|", {general.goal.lhs, general.goal.rhs}),
               tuple("<|", {specific.goal.lhs, specific.goal.rhs}), {}, [&](const Subst& sigma) {
                 std::vector<EmbedPattern> inst;
                 for (const auto& g : general.subgoals)
                   inst.push_back({substitute(g.lhs, sigma), substitute(g.rhs, sigma)});
                 return goal_multiset(inst) == target;
               });
}

template <class InstanceOf>
std::vector<RewriteRule> eliminate(std::vector<RewriteRule> raw, InstanceOf instance_of,
                                   bool merge_labels) {
  std::vector<RewriteRule> kept;
  for (auto& r : raw) {
    auto it = std::find_if(kept.begin(), kept.end(),
                           [&](const RewriteRule& k) { return instance_of(k, r); });
    if (it == kept.end()) {
      kept.push_back(std::move(r));
    } else if (merge_labels && it->label != r.label) {
      it->label += "+" + r.label;
    }
  }
  return kept;
}

std::vector<RewriteRule> raw_emb_rules(const Signature& u) {
  std::vector<RewriteRule> out;
  for (const auto& op : u.ops()) {
    if (op.arity() == 0) continue;
    for (std::size_t i = 0; i < op.arity(); ++i) {
      RewriteRule r;
      r.label = "Emb";
      auto xs = vars("X", op.arity());
      r.rhs = xs[i];
      r.lhs = app(op, std::move(xs));
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<RewriteRule> raw_rogd_rules(const Signature& u) {
  std::vector<RewriteRule> out;
  const FlatTerm x = rule_var("X");
  for (const auto& op : u.ops()) {
    for (std::size_t i = 0; i < op.arity(); ++i) {
      auto ts = vars("T", op.arity());
      RewriteRule r;
      r.label = "Diving";
      r.subgoals.push_back({x, ts[i]});
      r.goal = {x, app(op, std::move(ts))};
      out.push_back(std::move(r));
    }
  }
  for (const auto& op : u.ops()) {
    if (op.arity() == 0) {
      RewriteRule r;
      r.label = "Coupling";
      r.goal = {app(op, {}), app(op, {})};
      out.push_back(std::move(r));
      continue;
    }
    {
      auto ls = vars("T", op.arity());
      auto rs = vars("T", op.arity(), 1, "'");
      RewriteRule r;
      r.label = "Coupling";
      for (std::size_t i = 0; i < op.arity(); ++i) r.subgoals.push_back({ls[i], rs[i]});
      r.goal = {app(op, ls), app(op, rs)};
      out.push_back(std::move(r));
    }
    const auto t = [](const char* n) { return rule_var(n); };
    if (op.axioms.comm) {
      RewriteRule r;
      r.label = "Coupling_C";
      r.goal = {app(op, {t("T1"), t("T2")}), app(op, {t("T1'"), t("T2'")})};
      r.subgoals = {{t("T1"), t("T2'")}, {t("T2"), t("T1'")}};
      out.push_back(std::move(r));
    }
    if (op.axioms.assoc) {
      RewriteRule a1;
      a1.label = "Coupling_A";
      a1.goal = {app(op, {t("T0"), app(op, {t("T1"), t("T2")})}), app(op, {t("T0'"), t("T1'")})};
      a1.subgoals = {{app(op, {t("T0"), t("T1")}), t("T0'")}, {t("T2"), t("T1'")}};
      out.push_back(std::move(a1));
      RewriteRule a2;
      a2.label = "Coupling_A";
      a2.goal = {app(op, {t("T0"), t("T1")}), app(op, {t("T0'"), app(op, {t("T1'"), t("T2'")})})};
      a2.subgoals = {{t("T0"), app(op, {t("T0'"), t("T1'")})}, {t("T1"), t("T2'")}};
      out.push_back(std::move(a2));
    }
    if (op.axioms.assoc && op.axioms.comm) {
      RewriteRule c1;
      c1.label = "Coupling_AC";
      c1.goal = {app(op, {t("T0"), app(op, {t("T1"), t("T2")})}), app(op, {t("T0'"), t("T1'")})};
      c1.subgoals = {{app(op, {t("T0"), t("T1")}), t("T1'")}, {t("T2"), t("T0'")}};
      out.push_back(std::move(c1));
      RewriteRule c2;
      c2.label = "Coupling_AC";
      c2.goal = {app(op, {t("T0"), t("T1")}), app(op, {t("T0'"), app(op, {t("T1'"), t("T2'")})})};
      c2.subgoals = {{t("T1"), app(op, {t("T0'"), t("T1'")})}, {t("T0"), t("T2'")}};
      out.push_back(std::move(c2));
    }
  }
  return out;
}

Signature universal_of(const Signature& sig) {
  return is_universal(sig) ? sig : to_universal(sig);
}

}  // namespace

bool matches_mod_b(const FlatTerm& pattern, const FlatTerm& subject) {
  return match(pattern, subject, {}, [](const Subst&) { return true; });
}

RewriteTheory gen_emb_rules(const Signature& sig) {
  RewriteTheory th;
  th.kind = RewriteTheory::Kind::EmbU;
  th.sig = universal_of(sig);
  th.rules = eliminate(raw_emb_rules(th.sig), emb_instance_of, false);
  return th;
}

std::size_t emb_rule_count_raw(const Signature& sig) {
  return raw_emb_rules(universal_of(sig)).size();
}

RewriteTheory gen_rogd_rules(const Signature& sig) {
  RewriteTheory th;
  th.kind = RewriteTheory::Kind::Rogd;
  th.sig = universal_of(sig);
  th.rules = eliminate(raw_rogd_rules(th.sig), rogd_instance_of, true);
  for (auto& r : th.rules) {
    // "Coupling+Coupling_C+Coupling_A+..." reads as one merged coupling rule.
    if (r.label.find('+') == std::string::npos) continue;
    std::vector<std::string> kinds;
    std::stringstream ss(r.label);
    for (std::string part; std::getline(ss, part, '+');) {
      std::string kind = part == "Coupling" ? "free" : part.substr(part.find('_') + 1);
      if (part == "Diving") kind = "Diving";
      if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) kinds.push_back(kind);
    }
    if (kinds.size() == 1 && kinds.front() == "Diving") {
      r.label = "Diving";
      continue;
    }
    std::string label = "Coupling_{";
    for (std::size_t i = 0; i < kinds.size(); ++i) label += (i ? "," : "") + kinds[i];
    r.label = label + "}";
  }
  return th;
}

std::size_t rogd_rule_count_raw(const Signature& sig) {
  return raw_rogd_rules(universal_of(sig)).size();
}

void print_theory(std::ostream& os, const RewriteTheory& th) {
  for (const auto& r : th.rules) {
    if (th.kind == RewriteTheory::Kind::EmbU) {
      os << unflatten(r.lhs) << " -> " << unflatten(r.rhs) << '\n';
      continue;
    }
    os << '[' << r.label << "] " << unflatten(r.goal.lhs) << " <| " << unflatten(r.goal.rhs)
       << " => ";
    if (r.subgoals.empty()) os << "true";
    for (std::size_t i = 0; i < r.subgoals.size(); ++i) {
      if (i) os << " /\\ ";
      os << unflatten(r.subgoals[i].lhs) << " <| " << unflatten(r.subgoals[i].rhs);
    }
    os << '\n';
  }
}

std::string theory_to_string(const RewriteTheory& th) {
  std::ostringstream os;
  print_theory(os, th);
  return os.str();
}

}  // namespace hemb
