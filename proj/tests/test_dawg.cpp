#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "textidx/fwd_dawg.hpp"
#include "textidx/oracle.hpp"
#include "textidx/rev_dawg.hpp"

using namespace textidx;

namespace {

std::string longest(const Text& t, const Dawg& d, NodeId v) {
  return test::str(t, d[v].end_pos - d[v].len, d[v].len);
}

}  // namespace

TEST_CASE("edge sorting") {
  std::vector<DawgNode> nodes(3);
  nodes[1].len = nodes[2].len = 1;
  nodes[1].slink = nodes[2].slink = 0;
  nodes[1].slink_label = 1;
  nodes[2].slink_label = 3;
  std::vector<EdgeTriple> edges{{0, 3, 2}, {0, 1, 1}};
  Dawg d = assemble_dawg(nodes, edges, 0, 2);
  REQUIRE(d.out(0).size() == 2);
  CHECK(d.out(0)[0].symbol == 1);
  CHECK(d.out(0)[1].symbol == 3);
  CHECK(is_edge_sorted(d));
  CHECK(canonical_form(sort_dawg(d)) == canonical_form(d));

  std::vector<EdgeTriple> twice{{0, 1, 1}, {0, 1, 2}};
  CHECK_THROWS_AS(assemble_dawg(nodes, twice, 0, 2), Error);
}

TEST_CASE("black nodes and the augmented tree of abba$") {
  Text t = ingest_bytes("abba");
  SuffixTree st = build_suffix_tree(t.view());
  auto black = black_st_nodes(st, slt_view(st));
  std::set<std::string> black_st;
  for (std::size_t k = 0; k < st.size(); ++k)
    if (black[k]) black_st.insert(test::str(t, st.nodes[k].start, st.nodes[k].depth));
  CHECK(black_st == std::set<std::string>{"", "a", "b", "abba$"});

  Ast ast = build_ast(st, black);
  CHECK(ast.size() == 11);
  CHECK(ast.black_count() == 7);
  std::set<std::string> inserted, black_all;
  for (std::size_t k = 0; k < ast.size(); ++k) {
    const auto& x = ast.nodes[k];
    if (!ast.is_original(static_cast<NodeId>(k))) inserted.insert(test::str(t, x.start, x.depth));
    if (x.black) black_all.insert(test::str(t, x.start, x.depth));
  }
  CHECK(inserted == std::set<std::string>{"ab", "abb", "abba"});
  CHECK(black_all == std::set<std::string>{"", "a", "b", "ab", "abb", "abba", "abba$"});
}

TEST_CASE("a$ gets one inserted node") {
  Text t = ingest_bytes("a");
  SuffixTree st = build_suffix_tree(t.view());
  Ast ast = build_ast(st, black_st_nodes(st, slt_view(st)));
  CHECK(ast.size() == 4);
  CHECK(build_dawg(t.view()).node_count() == 3);
}

TEST_CASE("suffix chains and blocks") {
  Text t = ingest_bytes("abba");
  SuffixTree st = build_suffix_tree(t.view());
  auto black = black_st_nodes(st, slt_view(st));
  NodeId leaf = st.leaf_of[0];
  auto chain = suffix_chain(st, black, leaf);
  REQUIRE(chain.size() >= 2);
  CHECK(chain.front() == leaf);
  CHECK(black[static_cast<std::size_t>(chain.back())]);
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) CHECK_FALSE(black[static_cast<std::size_t>(chain[i])]);
  auto heads = partition_chain(st, chain);
  REQUIRE_FALSE(heads.empty());
  CHECK(heads.front() == 0);

  NodeId a = st.child(st.root(), 1);
  auto single = suffix_chain(st, black, a);
  CHECK(single.size() == 2);
  CHECK(partition_chain(st, single) == std::vector<std::int32_t>{0});
}

TEST_CASE("DAWG of abba$") {
  Text t = ingest_bytes("abba");
  Dawg d = build_dawg(t.view());
  CHECK(d.node_count() == 7);
  CHECK(d.edge_count() == 10);
  CHECK(d.slink_count() == 6);
  CHECK(is_edge_sorted(d));
  CHECK(canonical_isomorphic(d, oracle_minimal_dawg(t.view())));

  std::map<std::string, std::string> link;
  std::map<std::string, std::int32_t> shortest;
  for (std::size_t k = 0; k < d.node_count(); ++k) {
    const NodeId v = static_cast<NodeId>(k);
    if (v == d.source) continue;
    link[longest(t, d, v)] = longest(t, d, d[v].slink);
    shortest[longest(t, d, v)] = d.shortlen(v);
  }
  CHECK(link == std::map<std::string, std::string>{
                    {"a", ""}, {"b", ""}, {"ab", "b"}, {"abb", "b"}, {"abba", "a"}, {"abba$", ""}});
  CHECK(shortest["abb"] == 2);
  CHECK(shortest["abba"] == 2);
  CHECK(shortest["abba$"] == 1);
  CHECK(longest(t, d, d.sink) == "abba$");
}

TEST_CASE("Weiner links of abba$") {
  Text t = ingest_bytes("abba");
  SuffixTree st = build_suffix_tree(t.view());
  WeinerLinks ex = explicit_weiner(st);
  CHECK(ex.links.size() == st.size() - 1);
  CHECK(ex.implicit_count() == 0);
  WeinerLinks all = implicit_weiner(st, ex);
  CHECK(all.explicit_count() == st.size() - 1);
  for (std::size_t k = 0; k < st.size(); ++k) {
    auto links = all.of(static_cast<NodeId>(k));
    for (std::size_t i = 1; i < links.size(); ++i) CHECK(links[i - 1].symbol < links[i].symbol);
  }
  // "b" -> "ab" is implicit, its locus is the leaf abba$
  NodeId b = st.child(st.root(), 2);
  CHECK(all.find(b, 1) == st.leaf_of[0]);
  CHECK(all.find(b, 0) == kNoNode);

  std::vector<WeinerLink> dup{{0, 1, 1, true}, {0, 1, 2, true}};
  CHECK_THROWS_AS(group_weiner_links(dup, 3), Error);
}

TEST_CASE("reversed DAWG matches the DAWG of the reversal") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 1 + rng() % 40;
    std::string s(n, 'a');
    for (auto& c : s) c = static_cast<char>('a' + rng() % 3);
    Text t = ingest_bytes(s);
    SuffixTree st = build_suffix_tree(t.view());
    Dawg rd = build_reversed_dawg(st);
    std::vector<Symbol> rev(t.symbols().rbegin(), t.symbols().rend());
    REQUIRE_MESSAGE(canonical_isomorphic(rd, build_dawg({rev, t.dense_sigma()})), s);
    REQUIRE(rd.node_count() == st.size());
  }
}

TEST_CASE("DepthOnly blocks are wrong on aa") {
  Text t = ingest_bytes("aa");
  SuffixTree st = build_suffix_tree(t.view());
  Ast ast = build_ast(st, black_st_nodes(st, slt_view(st)));
  CHECK(canonical_isomorphic(dawg_from_ast(ast), oracle_minimal_dawg(t.view())));
  CHECK_FALSE(canonical_isomorphic(dawg_from_ast(ast, BlockRule::DepthOnly), oracle_minimal_dawg(t.view())));
}
