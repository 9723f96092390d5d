#include "doctest.h"
#include "helpers.hpp"
#include "textidx/text.hpp"

using namespace textidx;

TEST_CASE("byte input is rank compressed and sentinel terminated") {
  Text t = ingest_bytes("abba");
  CHECK(std::vector<Symbol>(t.symbols().begin(), t.symbols().end()) == std::vector<Symbol>{1, 2, 2, 1, 0});
  CHECK(t.size() == 5);
  CHECK(t.dense_sigma() == 3);
  CHECK(t.render(t.symbols()) == "abba$");

  Text one = ingest_bytes("a");
  CHECK(one.size() == 2);
  CHECK(one.symbols()[0] == 1);
}

TEST_CASE("integer input keeps the order of values") {
  std::vector<std::int64_t> raw{9, 400, 9};
  Text t = ingest(raw);
  CHECK(std::vector<Symbol>(t.symbols().begin(), t.symbols().end()) == std::vector<Symbol>{1, 2, 1, 0});
  CHECK(t.alphabet() == std::vector<std::int64_t>{9, 400});
  CHECK(t.original(2) == 400);
  CHECK(t.original(0) == kSentinelValue);
  CHECK(t.render(t.symbols()) == "9 400 9 $");
}

TEST_CASE("declared alphabet") {
  Text t = ingest_bytes("abaab", 3);
  CHECK(t.declared_sigma() == 3);
  CHECK(t.distinct_symbols() == 2);
  CHECK(t.absent_symbols() == std::vector<std::int64_t>{'c'});
  CHECK_THROWS_AS(ingest_bytes("abc", 2), Error);
  std::vector<std::int64_t> raw{5, 7};
  CHECK(ingest(raw, 4).absent_symbols() == std::vector<std::int64_t>{8, 9});
}

TEST_CASE("bad input") {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::BadInput;
  };
  CHECK(code([] { ingest_bytes(""); }) == ErrorCode::EmptyInput);
  std::vector<std::int64_t> reserved{1, kSentinelValue};
  CHECK(code([&] { ingest(reserved); }) == ErrorCode::ReservedSymbol);
  CHECK(code([] { ingest_bytes("ab", 1); }) == ErrorCode::AlphabetTooSmall);
  CHECK(code([] { parse_input("1 x 2", InputFormat::Ints); }) == ErrorCode::BadInput);
}

TEST_CASE("reverse_core") {
  auto rev = [](std::vector<std::int64_t> raw) {
    Text r = reverse_core(ingest(raw));
    return std::vector<Symbol>(r.symbols().begin(), r.symbols().end());
  };
  CHECK(rev({1, 2, 2, 1}) == std::vector<Symbol>{1, 2, 2, 1, 0});
  CHECK(rev({1, 2, 3}) == std::vector<Symbol>{3, 2, 1, 0});
  CHECK(rev({1, 1, 2}) == std::vector<Symbol>{2, 1, 1, 0});
}

TEST_CASE("decode_interval") {
  Text t = ingest_bytes("abba");
  CHECK(test::word(decode_interval(t, 2, 3)) == "bb");
  CHECK(test::word(decode_interval(t, 1, 1)) == "a");
  CHECK(decode_interval(t, 5, 5) == std::vector<std::int64_t>{kSentinelValue});
  CHECK_THROWS_AS(decode_interval(t, 0, 2), Error);
  CHECK_THROWS_AS(decode_interval(t, 3, 6), Error);
}

TEST_CASE("input formats") {
  CHECK(parse_input("ab\n", InputFormat::Bytes) == std::vector<std::int64_t>{'a', 'b'});
  CHECK(parse_input(">seq\nAC\nG T\n", InputFormat::Fasta) == std::vector<std::int64_t>{'A', 'C', 'G', 'T'});
  CHECK(parse_input(" 3 -1\n7 ", InputFormat::Ints) == std::vector<std::int64_t>{3, -1, 7});
}
