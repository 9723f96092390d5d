#ifndef TEXTIDX_DAWG_HPP
#define TEXTIDX_DAWG_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "textidx/types.hpp"

namespace textidx {

struct DawgEdge {
  Symbol symbol;
  NodeId target;
};

struct DawgNode {
  std::int32_t len = 0;           // length of the longest member
  NodeId slink = kNoNode;         // source only has none
  Symbol slink_label = -1;        // first symbol of the shortest member
  std::int32_t end_pos = 0;       // 1-based end of one occurrence of the longest member
};

struct EdgeTriple {
  NodeId source;
  Symbol symbol;
  NodeId target;
};

/// Directed acyclic word graph with suffix links.
///
/// Out-edges are stored contiguously per node and sorted by symbol; incoming
/// suffix links are stored per node sorted by label. Used for the forward DAWG,
/// the DAWG of the reversed text and the brute-force oracle alike.
class Dawg {
 public:
  std::vector<DawgNode> nodes;
  std::vector<std::int32_t> edge_offset;  // nodes.size() + 1 entries
  std::vector<DawgEdge> edges;
  std::vector<std::int32_t> slink_in_offset;
  std::vector<NodeId> slink_in;
  NodeId source = kNoNode;
  NodeId sink = kNoNode;

  std::size_t node_count() const noexcept { return nodes.size(); }
  std::size_t edge_count() const noexcept { return edges.size(); }
  /// Every node except the source carries one suffix link.
  std::size_t slink_count() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }

  const DawgNode& operator[](NodeId v) const noexcept { return nodes[static_cast<std::size_t>(v)]; }
  std::span<const DawgEdge> out(NodeId v) const noexcept {
    auto b = static_cast<std::size_t>(edge_offset[static_cast<std::size_t>(v)]);
    auto e = static_cast<std::size_t>(edge_offset[static_cast<std::size_t>(v) + 1]);
    return std::span<const DawgEdge>(edges).subspan(b, e - b);
  }
  std::span<const NodeId> slinks_into(NodeId v) const noexcept {
    auto b = static_cast<std::size_t>(slink_in_offset[static_cast<std::size_t>(v)]);
    auto e = static_cast<std::size_t>(slink_in_offset[static_cast<std::size_t>(v) + 1]);
    return std::span<const NodeId>(slink_in).subspan(b, e - b);
  }
  /// Transition target, or kNoNode.
  NodeId next(NodeId v, Symbol c) const noexcept;
  /// Length of the shortest member.
  std::int32_t shortlen(NodeId v) const noexcept {
    const auto& x = (*this)[v];
    return x.slink == kNoNode ? 0 : (*this)[x.slink].len + 1;
  }
};

/// Builds the edge and incoming-suffix-link tables from an unordered edge list
/// by two counting-sort passes (symbol, then source). A repeated (source, symbol)
/// pair is a StructureCorrupt error.
Dawg assemble_dawg(std::vector<DawgNode> nodes, std::span<const EdgeTriple> edges, NodeId source,
                   NodeId sink);

/// Re-sorts out-edges by symbol and incoming suffix links by label. Node ids are kept.
Dawg sort_dawg(Dawg d);

/// True iff every adjacency list is strictly increasing by symbol.
bool is_edge_sorted(const Dawg& d);

}  // namespace textidx

#endif  // TEXTIDX_DAWG_HPP
