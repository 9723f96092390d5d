#ifndef TEXTIDX_COMPACT_HPP
#define TEXTIDX_COMPACT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "textidx/affix.hpp"
#include "textidx/dawg.hpp"
#include "textidx/suffix_base.hpp"

namespace textidx {

/// Edge label: `length` symbols of the indexed text starting at 0-based `start`.
struct CdawgEdge {
  Symbol symbol;  // first label symbol
  std::int32_t start;
  std::int32_t length;
  NodeId target;
};

struct CdawgNode {
  std::int32_t len = 0;      // longest member
  std::int32_t end_pos = 0;  // 1-based end of one occurrence of it
  NodeId origin = kNoNode;   // id in the structure it was derived from
};

/// Compact DAWG; out-edges sorted by first symbol.
class Cdawg {
 public:
  std::vector<CdawgNode> nodes;
  std::vector<std::int32_t> edge_offset;
  std::vector<CdawgEdge> edges;
  NodeId source = kNoNode;
  NodeId sink = kNoNode;

  std::size_t node_count() const noexcept { return nodes.size(); }
  std::size_t edge_count() const noexcept { return edges.size(); }
  const CdawgNode& operator[](NodeId v) const noexcept { return nodes[static_cast<std::size_t>(v)]; }
  std::span<const CdawgEdge> out(NodeId v) const noexcept {
    auto b = static_cast<std::size_t>(edge_offset[static_cast<std::size_t>(v)]);
    auto e = static_cast<std::size_t>(edge_offset[static_cast<std::size_t>(v) + 1]);
    return std::span<const CdawgEdge>(edges).subspan(b, e - b);
  }
};

/// Contracts every node with one out-edge other than the source, the sink and
/// the nodes on the sink's suffix-link chain. Labels refer to the text the DAWG
/// was built on.
Cdawg cdawg_from_dawg(const Dawg& d);

/// Forward and backward CDAWGs over one node set: the source, the sink and the
/// maximal repeats. Node i corresponds to suffix-tree node st_node[i]. Forward
/// labels refer to the text, backward labels to its full reversal.
struct SymmetricCdawg {
  std::vector<NodeId> st_node;
  Cdawg forward;
  Cdawg backward;

  std::size_t node_count() const noexcept { return st_node.size(); }
};

/// `rd` must be the reversed DAWG sharing st's node ids.
SymmetricCdawg build_symmetric_cdawg(const SuffixTree& st, const Dawg& rd);

struct LsTrieNode {
  NodeId parent = kNoNode;
  std::int32_t depth = 0;
  std::int32_t start = 0;      // 0-based start of one occurrence
  NodeId slink = kNoNode;
  NodeId st_node = kNoNode;    // type-1: itself; type-2: the suffix-tree node below
  bool type2 = false;
};

struct LsTrieEdge {
  Symbol symbol;
  std::int32_t witness;  // 0-based text position of the full label
  NodeId target;
};

/// Suffix tree with the implicit modified-Weiner-link targets made explicit and
/// edge labels cut to their first symbol. Ids [0, st_count) are suffix-tree ids.
class LsTrie {
 public:
  std::vector<LsTrieNode> nodes;
  std::vector<std::int32_t> edge_offset;
  std::vector<LsTrieEdge> edges;
  std::size_t st_count = 0;

  std::size_t size() const noexcept { return nodes.size(); }
  std::size_t type2_count() const noexcept { return nodes.size() - st_count; }
  const LsTrieNode& operator[](NodeId v) const noexcept { return nodes[static_cast<std::size_t>(v)]; }
  std::span<const LsTrieEdge> out(NodeId v) const noexcept {
    auto b = static_cast<std::size_t>(edge_offset[static_cast<std::size_t>(v)]);
    auto e = static_cast<std::size_t>(edge_offset[static_cast<std::size_t>(v) + 1]);
    return std::span<const LsTrieEdge>(edges).subspan(b, e - b);
  }
  /// Length of the full label on the edge into v.
  std::int32_t label_length(NodeId v) const noexcept {
    return (*this)[v].depth - (*this)[(*this)[v].parent].depth;
  }
};

LsTrie build_lstrie(const SuffixTree& st, const ModifiedWeinerLinks& mwl);

}  // namespace textidx

#endif  // TEXTIDX_COMPACT_HPP
