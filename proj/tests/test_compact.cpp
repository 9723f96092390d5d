#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "textidx/affix.hpp"
#include "textidx/compact.hpp"
#include "textidx/fwd_dawg.hpp"
#include "textidx/oracle.hpp"

using namespace textidx;

TEST_CASE("CDAWG of abba$") {
  Text t = ingest_bytes("abba");
  Cdawg c = cdawg_from_dawg(build_dawg(t.view()));
  CHECK(c.node_count() == 4);
  std::set<std::string> internal;
  for (std::size_t k = 0; k < c.node_count(); ++k) {
    const NodeId v = static_cast<NodeId>(k);
    if (v != c.source && v != c.sink) internal.insert(test::str(t, c[v].end_pos - c[v].len, c[v].len));
    auto out = c.out(v);
    for (std::size_t i = 1; i < out.size(); ++i) CHECK(out[i - 1].symbol < out[i].symbol);
    for (const auto& e : out) {
      CHECK(t.symbols()[static_cast<std::size_t>(e.start)] == e.symbol);
      CHECK(c[e.target].len >= c[v].len + e.length);
    }
  }
  CHECK(internal == std::set<std::string>{"a", "b"});
}

TEST_CASE("maximal repeats") {
  auto repeats = [](const char* s) {
    Text t = ingest_bytes(s);
    std::set<std::string> out;
    for (const auto& r : naive_maximal_repeats(t.view())) out.insert(t.render(r));
    return out;
  };
  CHECK(repeats("abba") == std::set<std::string>{"a", "b"});
  CHECK(repeats("aaa") == std::set<std::string>{"a", "aa"});
  CHECK(repeats("ab").empty());
}

TEST_CASE("symmetric CDAWG projections") {
  for (const char* s : {"abba", "aaa", "abaab", "mississippi", "a"}) {
    Text t = ingest_bytes(s);
    SuffixTree st = build_suffix_tree(t.view());
    Dawg rd = build_reversed_dawg(st);
    SymmetricCdawg sc = build_symmetric_cdawg(st, rd);
    Cdawg c = cdawg_from_dawg(build_dawg(t.view()));
    CHECK_MESSAGE(canonical_form(sc.forward, t.symbols()) == canonical_form(c, t.symbols()), s);
    CHECK(sc.node_count() == c.node_count());
    CHECK(sc.backward.node_count() == c.node_count());
  }
}

TEST_CASE("linear-size suffix trie") {
  for (const char* s : {"abba", "aaa", "abaab", "mississippi"}) {
    Text t = ingest_bytes(s);
    SuffixTree st = build_suffix_tree(t.view());
    Ast ast = build_ast(st, black_st_nodes(st, slt_view(st)));
    AffixTree at = build_affix_tree(ast);
    WeinerLinks wl = implicit_weiner(st, explicit_weiner(st));
    ModifiedWeinerLinks mwl = extract_mwl(at, wl);
    LsTrie ls = build_lstrie(st, mwl);
    CHECK(ls.st_count == st.size());
    CHECK(ls.type2_count() == wl.implicit_count());
    for (std::size_t k = ls.st_count; k < ls.size(); ++k) {
      const auto& x = ls.nodes[k];
      CHECK(x.type2);
      const NodeId src = x.slink;
      std::string ax = test::str(t, x.start, x.depth);
      CHECK(ax.substr(1) == test::str(t, st[src].start, st[src].depth));
    }
    for (std::size_t k = 0; k < ls.size(); ++k)
      for (const auto& e : ls.out(static_cast<NodeId>(k))) CHECK(t.symbols()[static_cast<std::size_t>(e.witness)] == e.symbol);
  }
}
