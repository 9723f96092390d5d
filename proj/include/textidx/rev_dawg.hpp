#ifndef TEXTIDX_REV_DAWG_HPP
#define TEXTIDX_REV_DAWG_HPP

#include <span>
#include <vector>

#include "textidx/dawg.hpp"
#include "textidx/suffix_base.hpp"

namespace textidx {

/// (source, symbol, Lrep(symbol . source)); explicit iff the target spells symbol . source.
struct WeinerLink {
  NodeId source;
  Symbol symbol;
  NodeId target;
  bool explicit_link;
};

/// Weiner links grouped by source node and sorted by symbol.
struct WeinerLinks {
  std::vector<std::int32_t> offset;
  std::vector<WeinerLink> links;

  std::span<const WeinerLink> of(NodeId v) const noexcept {
    auto b = static_cast<std::size_t>(offset[static_cast<std::size_t>(v)]);
    auto e = static_cast<std::size_t>(offset[static_cast<std::size_t>(v) + 1]);
    return std::span<const WeinerLink>(links).subspan(b, e - b);
  }
  /// Target of (v, c), or kNoNode.
  NodeId find(NodeId v, Symbol c) const noexcept;
  std::size_t explicit_count() const noexcept;
  std::size_t implicit_count() const noexcept { return links.size() - explicit_count(); }
};

/// Groups and sorts a link list; a repeated (source, symbol) pair is StructureCorrupt.
WeinerLinks group_weiner_links(std::span<const WeinerLink> links, std::size_t node_count);

/// The reversed suffix links.
WeinerLinks explicit_weiner(const SuffixTree& st);

/// Adds the implicit links: for every explicit (w, a, aw), each ancestor p of w
/// strictly above w and not above the node spelling a . parent(aw) gets (p, a, aw).
WeinerLinks implicit_weiner(const SuffixTree& st, const WeinerLinks& explicit_links);

/// DAWG of the reversed text over the suffix-tree node set: node ids are the
/// suffix-tree ids, edges are the Weiner links, suffix links are the reversed
/// tree edges labeled by the first edge symbol. Source is the root, sink the leaf
/// of suffix 0. end_pos is relative to the reversed text.
Dawg assemble_reversed_dawg(const SuffixTree& st, const WeinerLinks& wl);

/// Suffix tree -> Weiner links -> reversed DAWG.
Dawg build_reversed_dawg(const SuffixTree& st);

}  // namespace textidx

#endif  // TEXTIDX_REV_DAWG_HPP
