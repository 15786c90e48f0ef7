#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hemb/rewrite_theory.hpp"
#include "support.hpp"

using namespace hemb;
using namespace hemb::testing;

namespace {
std::string golden(const std::string& name) {
  std::ifstream in(std::string(HEMB_FIXTURES) + "/golden/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_label(const RewriteTheory& th, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& r : th.rules) n += r.label.rfind(prefix, 0) == 0;
  return n;
}
}  // namespace

TEST_CASE("NAT theories match the golden files") {
  const Signature nat = fixture("nat.fmod");
  const auto emb = gen_emb_rules(nat);
  CHECK(emb.rules.size() == 2);
  CHECK(theory_to_string(emb) == golden("nat.emb.txt"));
  const auto rogd = gen_rogd_rules(nat);
  CHECK(rogd.rules.size() == 6);
  CHECK(count_label(rogd, "Diving") == 2);
  CHECK(count_label(rogd, "Coupling") == 4);
  CHECK(theory_to_string(rogd) == golden("nat.rogd.txt"));
  CHECK(rogd_rule_count_raw(nat) == 12);
}

TEST_CASE("small signatures") {
  const Signature c = parse_signature("fmod C is sort S . op c : -> S . endfm");
  CHECK(gen_emb_rules(c).rules.empty());
  const auto rc = gen_rogd_rules(c);
  REQUIRE(rc.rules.size() == 2);
  CHECK(theory_to_string(rc) == "[Coupling] # <| # => true\n[Coupling] c <| c => true\n");

  const Signature g = parse_signature("fmod G is sort S . op c : -> S . op g : S S -> S . endfm");
  const auto eg = gen_emb_rules(g);
  CHECK(theory_to_string(eg) == "g(X1:U,X2:U) -> X1:U\ng(X1:U,X2:U) -> X2:U\n");
  const auto rg = gen_rogd_rules(g);
  CHECK(count_label(rg, "Diving") == 2);
  CHECK(count_label(rg, "Coupling") == 3);
  CHECK(rogd_rule_count_raw(g) == rg.rules.size());
}

TEST_CASE("projection rule counts before and after elimination") {
  for (const char* name : {"nat.fmod", "natlist.fmod", "peano-free.fmod"}) {
    const Signature sig = fixture(name);
    std::size_t arities = 0, comm = 0;
    for (const auto& op : sig.ops()) {
      arities += op.arity();
      comm += op.axioms.comm;
    }
    CHECK(emb_rule_count_raw(sig) == arities);
    CHECK(gen_emb_rules(sig).rules.size() == arities - comm);
  }
}

TEST_CASE("matching modulo axioms") {
  const auto X = FlatTerm::variable("X", "U"), Y = FlatTerm::variable("Y", "U");
  const auto a = FlatTerm::leaf("a"), b = FlatTerm::leaf("b"), c = FlatTerm::leaf("c");
  const Axioms ac{true, true}, as{true, false}, cm{false, true};
  const auto pat_ac = FlatTerm::make("f", ac, {X, Y});
  CHECK(matches_mod_b(pat_ac, FlatTerm::make("f", ac, {a, b, c})));
  CHECK_FALSE(matches_mod_b(pat_ac, a));
  const auto pat_dup = FlatTerm::make("f", ac, {X, X});
  CHECK(matches_mod_b(pat_dup, FlatTerm::make("f", ac, {a, b, a, b})));
  CHECK_FALSE(matches_mod_b(pat_dup, FlatTerm::make("f", ac, {a, b, c})));
  const auto pat_a = FlatTerm::make("g", as, {a, X});
  CHECK(matches_mod_b(pat_a, FlatTerm::make("g", as, {a, b, c})));
  CHECK_FALSE(matches_mod_b(pat_a, FlatTerm::make("g", as, {b, a, c})));
  const auto pat_c = FlatTerm::make("h", cm, {a, X});
  CHECK(matches_mod_b(pat_c, FlatTerm::make("h", cm, {b, a})));
}
