#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "textidx/fwd_dawg.hpp"
#include "textidx/maw.hpp"
#include "textidx/oracle.hpp"

using namespace textidx;

namespace {

std::set<std::string> maws(const char* s, std::size_t sigma) {
  Text t = ingest_bytes(s, sigma);
  return test::words(decode_maws(compute_maws(build_dawg(t.view()), t)));
}

}  // namespace

TEST_CASE("minimal absent words of abaab over {a,b,c}") {
  CHECK(maws("abaab", 3) == std::set<std::string>{"aaa", "aaba", "bab", "bb", "c"});
  Text t = ingest_bytes("abaab", 3);
  CHECK(maw_length1(t) == std::vector<std::int64_t>{'c'});
  MawSet ms = compute_maws(build_dawg(t.view()), t);
  CHECK(ms.size() == 5);
  auto sorted = decode_maws(ms, true);
  CHECK(test::word(sorted.front()) == "c");
  CHECK(test::word(sorted.back()) == "aaba");
}

TEST_CASE("triples decode to y[i..j] b") {
  Text t = ingest_bytes("abaab", 3);
  MawSet ms = compute_maws(build_dawg(t.view()), t);
  for (const auto& m : ms.triples) {
    auto w = m.i <= m.j ? decode_interval(t, static_cast<std::size_t>(m.i), static_cast<std::size_t>(m.j))
                        : std::vector<std::int64_t>{};
    w.push_back(t.original(m.b));
    CHECK(is_minimal_absent(t, w));
  }
}

TEST_CASE("small alphabets") {
  CHECK(maws("ab", 2) == std::set<std::string>{"aa", "bb", "ba"});
  CHECK(maws("a", 4) == std::set<std::string>{"aa", "b", "c", "d"});
  CHECK(maws("a", 1) == std::set<std::string>{"aa"});
  CHECK(maws("aab", 2) == std::set<std::string>{"aaa", "ba", "bb"});
}

TEST_CASE("bounds") {
  Text t = ingest_bytes("abaab", 3);
  CHECK(maw_lower_bound(t) == 3);
  CHECK(maw_upper_bound(t) == (2 - 1) * (5 - 1) + 3);
}

TEST_CASE("agrees with the brute force and the per-symbol scan") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 1 + rng() % 30;
    const std::size_t sigma = 1 + rng() % 4;
    std::string s(n, 'a');
    for (auto& c : s) c = static_cast<char>('a' + rng() % sigma);
    Text t = ingest_bytes(s, sigma + 1);
    Dawg d = build_dawg(t.view());
    MawStats stats;
    MawSet ms = compute_maws(d, t, &stats);
    REQUIRE_MESSAGE(decode_maws(ms, true) == naive_maw(t), s);
    REQUIRE(decode_maws(reference_mf_trie(d, t), true) == naive_maw(t));
    REQUIRE(stats.examined <= 2 * (d.edge_count() + ms.triples.size() + d.node_count()));
  }
}

TEST_CASE("unsorted adjacency is rejected") {
  Text t = ingest_bytes("abaab");
  Dawg d = build_dawg(t.view());
  for (std::size_t k = 0; k < d.node_count(); ++k) {
    auto b = d.edges.begin() + d.edge_offset[k];
    auto e = d.edges.begin() + d.edge_offset[k + 1];
    if (e - b >= 2) {
      std::reverse(b, e);
      break;
    }
  }
  try {
    compute_maws(d, t);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSorted);
  }
}
