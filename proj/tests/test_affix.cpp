#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "textidx/affix.hpp"
#include "textidx/fwd_dawg.hpp"
#include "textidx/oracle.hpp"

using namespace textidx;

namespace {

struct Built {
  Text t;
  SuffixTree st;
  Ast ast;
  AffixTree at;
  explicit Built(const char* s)
      : t(ingest_bytes(s)),
        st(build_suffix_tree(t.view())),
        ast(build_ast(st, black_st_nodes(st, slt_view(st)))),
        at(build_affix_tree(ast)) {}
  Built(const Built&) = delete;
};

std::vector<Symbol> codes(const Text& t, const std::string& w) {
  std::vector<Symbol> out;
  for (char c : w) {
    auto it = std::lower_bound(t.alphabet().begin(), t.alphabet().end(), c);
    out.push_back(static_cast<Symbol>(it - t.alphabet().begin()) + 1);
  }
  return out;
}

}  // namespace

TEST_CASE("affix tree of a$") {
  Built b("a");
  const NodeId root = 0;
  auto back = b.at.backward_of(root);
  REQUIRE(back.size() == 2);
  CHECK(b.at.back_symbol(back[0]) == kSentinel);
  CHECK(b.at.back_symbol(back[1]) == 1);
  CHECK(b.at.depth(back[1].target) == 1);
  CHECK(b.at.backward_of(back[1].target).empty());
  // a$ hangs below $ on the backward side
  auto from_end = b.at.backward_of(back[0].target);
  REQUIRE(from_end.size() == 1);
  CHECK(b.at.back_symbol(from_end[0]) == 1);
  CHECK(b.at.depth(from_end[0].target) == 2);
}

TEST_CASE("backward parents are the longest node suffixes") {
  Built b("abba");
  REQUIRE(b.at.size() == 11);
  for (std::size_t k = 1; k < b.at.size(); ++k) {
    const NodeId v = static_cast<NodeId>(k);
    const NodeId p = b.at.back_parent[k];
    REQUIRE(p != kNoNode);
    std::string s = test::str(b.t, b.ast[v].start, b.ast[v].depth);
    std::string ps = test::str(b.t, b.ast[p].start, b.ast[p].depth);
    CHECK(s.substr(s.size() - ps.size()) == ps);
    for (std::size_t len = ps.size() + 1; len < s.size(); ++len) {
      bool is_node = false;
      for (const auto& x : b.ast.nodes) is_node = is_node || test::str(b.t, x.start, x.depth) == s.substr(s.size() - len);
      CHECK_FALSE(is_node);
    }
  }
}

TEST_CASE("loci in both directions") {
  Built b("abba");
  auto f = forward_locus(b.at, codes(b.t, "bb"));
  auto r = backward_locus(b.at, codes(b.t, "bb"));
  REQUIRE(f);
  REQUIRE(r);
  CHECK(node_at(b.at, *f) == kNoNode);
  CHECK(node_at(b.at, *r) == kNoNode);
  CHECK_FALSE(forward_locus(b.at, codes(b.t, "aa")));

  auto abb = extend_left(b.at, *r, 1);
  REQUIRE(abb);
  CHECK(node_at(b.at, *abb) != kNoNode);
  CHECK(b.at.depth(abb->node) == 3);
  auto abba = extend_right(b.at, *forward_locus(b.at, codes(b.t, "abb")), 1);
  REQUIRE(abba);
  CHECK(abba->depth == 4);
  CHECK_FALSE(extend_left(b.at, *r, 2));
}

TEST_CASE("modified Weiner links") {
  Built b("abba");
  WeinerLinks wl = implicit_weiner(b.st, explicit_weiner(b.st));
  ModifiedWeinerLinks mwl = extract_mwl(b.at, wl);
  CHECK(mwl.links.size() == wl.links.size());
  CHECK(mwl.implicit_count() == wl.implicit_count());
  for (const auto& l : mwl.links) {
    std::string x = test::str(b.t, b.st[l.source].start, b.st[l.source].depth);
    std::string ax = test::str(b.t, b.st[l.target].start, l.depth);
    CHECK(ax == b.t.render(std::vector<Symbol>{l.symbol}) + x);
    CHECK(l.explicit_link == (l.depth == b.st[l.target].depth));
  }
}
