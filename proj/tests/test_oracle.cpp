#include "doctest.h"
#include "helpers.hpp"
#include "textidx/fwd_dawg.hpp"
#include "textidx/oracle.hpp"

using namespace textidx;

TEST_CASE("end-position classes of abba$") {
  Text t = ingest_bytes("abba");
  NaiveClasses nc = naive_classes(t.view());
  CHECK(nc.substrings.size() == 14);
  CHECK(nc.end_pos.size() == 7);
  std::set<std::string> r;
  for (const auto& w : nc.r_set()) r.insert(t.render(w));
  CHECK(r == std::set<std::string>{"", "a", "b", "ab", "abb", "abba", "abba$"});
  std::set<std::string> l;
  for (const auto& w : nc.l_set()) l.insert(t.render(w));
  CHECK(l == std::set<std::string>{"", "a", "b", "abba$", "bba$", "ba$", "a$", "$"});
}

TEST_CASE("oracle DAWG") {
  Text t = ingest_bytes("abba");
  Dawg d = oracle_minimal_dawg(t.view());
  CHECK(d.node_count() == 7);
  CHECK(d.edge_count() == 10);
  CHECK(canonical_isomorphic(d, d));
  CHECK(canonical_isomorphic(build_dawg(t.view()), d));
  CHECK_FALSE(canonical_isomorphic(d, oracle_minimal_dawg(ingest_bytes("abab").view())));
  CHECK(naive_distinct_substrings(t.view()) == 13);
}

TEST_CASE("brute-force absent words") {
  Text t = ingest_bytes("abaab", 3);
  CHECK(test::words(naive_maw(t)) == std::set<std::string>{"aaa", "aaba", "bab", "bb", "c"});
  std::vector<std::int64_t> bb{'b', 'b'}, ab{'a', 'b'}, aabab{'a', 'a', 'b', 'a', 'b'};
  CHECK(is_minimal_absent(t, bb));
  CHECK_FALSE(is_minimal_absent(t, ab));
  CHECK_FALSE(is_minimal_absent(t, aabab));
}

TEST_CASE("caps") {
  Text t = ingest_bytes(std::string(400, 'a'));
  CHECK_THROWS_AS(naive_maw(t), Error);
  CHECK_THROWS_AS(naive_classes(t.view(), 10), Error);
}
