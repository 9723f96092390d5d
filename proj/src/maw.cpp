#include "textidx/maw.hpp"

#include <algorithm>
#include <set>

namespace textidx {

std::vector<std::int64_t> maw_length1(const Text& t) { return t.absent_symbols(); }

std::uint64_t maw_lower_bound(const Text& t) { return t.declared_sigma(); }

std::uint64_t maw_upper_bound(const Text& t) {
  const std::uint64_t sy = t.distinct_symbols();
  const std::uint64_t n = t.core_size();
  return (sy - 1) * (n - 1) + t.declared_sigma();
}

MawSet compute_maws(const Dawg& d, const Text& t, MawStats* stats) {
  MawSet ms;
  ms.text = &t;
  auto examined = for_each_maw(d, [&](const MawTriple& m) { ms.triples.push_back(m); });
  ms.length1 = maw_length1(t);
  if (stats) stats->examined = examined;
  return ms;
}

std::vector<std::vector<std::int64_t>> decode_maws(const MawSet& ms, bool by_length) {
  std::vector<std::vector<std::int64_t>> words;
  words.reserve(ms.size());
  for (const auto& m : ms.triples) {
    auto w = decode_interval(*ms.text, static_cast<std::size_t>(m.i), static_cast<std::size_t>(m.j));
    w.push_back(ms.text->original(m.b));
    words.push_back(std::move(w));
  }
  for (auto c : ms.length1) words.push_back({c});

  std::set<std::vector<std::int64_t>> seen;
  std::erase_if(words, [&](const auto& w) { return !seen.insert(w).second; });
  if (by_length)
    std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
  return words;
}

}  // namespace textidx
