#include <doctest.h>

#include "support.hpp"

using namespace hemb;
using namespace hemb::testing;

TEST_CASE("canonicalization is idempotent and class-invariant") {
  CHECK(prop_canonical_idempotence(101) == 0);
}

TEST_CASE("eq_mod_b is an equivalence matching the class") { CHECK(prop_eq_mod_b_laws(102) == 0); }

TEST_CASE("term order is a strict total order") { CHECK(prop_term_order_total(103) == 0); }

TEST_CASE("sharp yields ground fixed points") { CHECK(prop_sharp(104) == 0); }

TEST_CASE("Lemma 1") { CHECK(prop_lemma1(105) == 0); }

TEST_CASE("embedding is reflexive, monotone and transitive") {
  CHECK(prop_embedding_order(106) == 0);
}

TEST_CASE("all_A equals its greedy variant") { CHECK(prop_all_a_greedy(107) == 0); }

TEST_CASE("all_AC ignores argument order") { CHECK(prop_all_ac_permutation(108) == 0); }

TEST_CASE("whistle pigeonhole") { CHECK(prop_whistle_pigeonhole(109) == 0); }

TEST_CASE("search engines match the oracle exactly") {
  for (const auto& g : goal_suite(suite_fixtures(), 150, 110)) {
    const bool expected = oracle_embeds(g);
    INFO(g.lhs.str(), " <| ", g.rhs.str());
    CHECK(run_engine(Engine::Naive, g).holds() == expected);
    CHECK(run_engine(Engine::Rogd, g).holds() == expected);
  }
}

TEST_CASE("flat engines are sound and agree with each other") {
  for (const auto& g : goal_suite(suite_fixtures(), 150, 111)) {
    const bool ml = run_engine(Engine::Ml, g).holds();
    CHECK(run_engine(Engine::Sml, g).holds() == ml);
    if (ml) CHECK(oracle_embeds(g));
  }
}
