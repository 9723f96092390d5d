#ifndef TEXTIDX_MAW_HPP
#define TEXTIDX_MAW_HPP

#include <cstdint>
#include <vector>

#include "textidx/dawg.hpp"
#include "textidx/text.hpp"

namespace textidx {

/// The absent word y[i..j] . b, 1-based inclusive positions.
struct MawTriple {
  std::int32_t i;
  std::int32_t j;
  Symbol b;
  friend bool operator==(const MawTriple&, const MawTriple&) = default;
};

struct MawSet {
  const Text* text = nullptr;
  std::vector<MawTriple> triples;
  std::vector<std::int64_t> length1;  // original values

  std::size_t size() const noexcept { return triples.size() + length1.size(); }
};

/// Declared-alphabet symbols that do not occur in the text.
std::vector<std::int64_t> maw_length1(const Text& t);

/// Size bounds: sigma <= |MAW| <= (sigma_y - 1)(n - 1) + sigma, n the core length.
std::uint64_t maw_lower_bound(const Text& t);
std::uint64_t maw_upper_bound(const Text& t);

/// Calls visit(MawTriple) for every minimal absent word of length >= 2, node by
/// node in id order and by symbol within a node. The DAWG must be built on the
/// sentinel-terminated text with edges sorted. Returns the number of adjacency
/// entries examined.
template <class Visit>
std::uint64_t for_each_maw(const Dawg& d, Visit&& visit) {
  std::uint64_t examined = 0;
  for (std::size_t v = 0; v < d.node_count(); ++v) {
    const NodeId u = static_cast<NodeId>(v);
    if (u == d.source || u == d.sink) continue;
    const DawgNode& node = d[u];
    const auto mine = d.out(u);
    const auto theirs = d.out(node.slink);
    const std::int32_t j = node.end_pos;
    const std::int32_t i = j - d[node.slink].len;
    std::size_t k = 0;
    Symbol last = -1;
    for (const DawgEdge& e : theirs) {
      ++examined;
      if (e.symbol <= last) fail(ErrorCode::NotSorted, "DAWG adjacency is not sorted");
      last = e.symbol;
      while (k < mine.size() && mine[k].symbol < e.symbol) {
        if (k > 0 && mine[k - 1].symbol >= mine[k].symbol) fail(ErrorCode::NotSorted, "DAWG adjacency is not sorted");
        ++k;
        ++examined;
      }
      if (k < mine.size() && mine[k].symbol == e.symbol) {
        ++k;
        ++examined;
        continue;
      }
      if (e.symbol != kSentinel) visit(MawTriple{i, j, e.symbol});
    }
  }
  return examined;
}

struct MawStats {
  std::uint64_t examined = 0;
};

MawSet compute_maws(const Dawg& d, const Text& t, MawStats* stats = nullptr);

/// Decoded words in original symbol values: triples in order, then length-1
/// words. Duplicates are removed; `by_length` sorts by (length, symbols).
std::vector<std::vector<std::int64_t>> decode_maws(const MawSet& ms, bool by_length = false);

}  // namespace textidx

#endif  // TEXTIDX_MAW_HPP
