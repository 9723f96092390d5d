#include "doctest.h"
#include "textidx/fwd_dawg.hpp"
#include "textidx/verify.hpp"

using namespace textidx;

TEST_CASE("all properties hold on a small corpus") {
  VerifyConfig cfg;
  cfg.max_n = 40;
  cfg.random_cases = 30;
  cfg.exhaustive_binary = 7;
  cfg.exhaustive_ternary = 4;
  for (const auto& r : run_verify(cfg)) CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
}

TEST_CASE("only restricts the suite") {
  VerifyConfig cfg;
  cfg.max_n = 20;
  cfg.random_cases = 5;
  cfg.only = {"maw"};
  auto results = run_verify(cfg);
  REQUIRE(results.size() == 1);
  CHECK(results[0].name == "maw");
  cfg.only = {"nope"};
  CHECK_THROWS_AS(run_verify(cfg), Error);
}

TEST_CASE("a broken block partition is caught with a short counterexample") {
  VerifyConfig cfg;
  cfg.only = {"dawg"};
  cfg.dawg_builder = [](SymbolView v) {
    SuffixTree st = build_suffix_tree(v);
    Ast ast = build_ast(st, black_st_nodes(st, slt_view(st)));
    return dawg_from_ast(ast, BlockRule::DepthOnly);
  };
  auto results = run_verify(cfg);
  REQUIRE(results.size() == 1);
  CHECK_FALSE(results[0].passed);
  CHECK(!results[0].counterexample.empty());
  CHECK(results[0].counterexample.size() <= 12);
}

TEST_CASE("random texts") {
  Text t = random_text(50, 4, 9);
  CHECK(t.core_size() == 50);
  CHECK(t.distinct_symbols() <= 4);
  CHECK(t.bytes());
  Text again = random_text(50, 4, 9);
  CHECK(std::equal(t.symbols().begin(), t.symbols().end(), again.symbols().begin(), again.symbols().end()));
  CHECK_FALSE(random_text(50, 100, 9).bytes());
}
