#ifndef TEXTIDX_SUFFIX_BASE_HPP
#define TEXTIDX_SUFFIX_BASE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "textidx/types.hpp"

namespace textidx {

/// Suffix array with 0-based start positions; rank is the inverse permutation.
struct SuffixArray {
  std::vector<std::int32_t> sa;
  std::vector<std::int32_t> rank;
};

/// lcp[k] = LCP of the suffixes sa[k-1] and sa[k] for k >= 1; lcp[0] = 0.
struct LcpArray {
  std::vector<std::int32_t> lcp;
};

/// Suffix array by induced sorting (SA-IS). Linear in the length for dense codes.
std::vector<std::int32_t> sa_is(std::span<const std::int32_t> s, std::int32_t upper);

SuffixArray build_sa(SymbolView text);
/// Kasai et al.
LcpArray build_lcp(SymbolView text, const SuffixArray& sa);

struct StNode {
  NodeId parent = kNoNode;
  std::int32_t depth = 0;       // |x|
  std::int32_t start = 0;       // 0-based start of one occurrence of x
  std::int32_t suffix = -1;     // leaves only: the suffix they spell
  std::int32_t leaf_count = 0;  // |BegPos(x)|
  std::int32_t sa_lo = 0;       // leaves below occupy ranks [sa_lo, sa_hi]
  std::int32_t sa_hi = 0;
  NodeId slink = kNoNode;
};

/// Edge-sorted suffix tree with text-interval edge labels.
///
/// Node ids are dense in construction order with the root at 0. Children are
/// stored contiguously per node, sorted by the first symbol of their edge. The
/// tree keeps a view of the text it was built from; the text must outlive it.
class SuffixTree {
 public:
  SymbolView text;
  std::vector<StNode> nodes;
  std::vector<std::int32_t> child_offset;  // nodes.size() + 1 entries
  std::vector<NodeId> children;
  std::vector<NodeId> leaf_of;   // suffix start -> leaf id
  std::vector<NodeId> lca_at;    // lca_at[k] = LCA of leaves of sa[k-1], sa[k]

  static constexpr NodeId root() noexcept { return 0; }
  std::size_t size() const noexcept { return nodes.size(); }
  const StNode& operator[](NodeId v) const noexcept { return nodes[static_cast<std::size_t>(v)]; }

  bool is_leaf(NodeId v) const noexcept { return (*this)[v].suffix >= 0; }
  std::span<const NodeId> children_of(NodeId v) const noexcept {
    auto b = static_cast<std::size_t>(child_offset[static_cast<std::size_t>(v)]);
    auto e = static_cast<std::size_t>(child_offset[static_cast<std::size_t>(v) + 1]);
    return std::span<const NodeId>(children).subspan(b, e - b);
  }
  /// Edge label of v (v != root) as a 0-based text interval [edge_start, edge_start + edge_length).
  std::int32_t edge_start(NodeId v) const noexcept {
    return (*this)[v].start + (*this)[(*this)[v].parent].depth;
  }
  std::int32_t edge_length(NodeId v) const noexcept {
    return (*this)[v].depth - (*this)[(*this)[v].parent].depth;
  }
  Symbol first_symbol(NodeId v) const noexcept {
    return text[static_cast<std::size_t>(edge_start(v))];
  }
  /// Child of v whose edge starts with c, or kNoNode.
  NodeId child(NodeId v, Symbol c) const noexcept;
};

/// Bottom-up construction from the sorted suffixes; suffix links are left unset.
SuffixTree st_from_sa_lcp(SymbolView text, const SuffixArray& sa, const LcpArray& lcp);

/// slink(v) = LCA(leaf(i+1), leaf(j+1)) for the first/last leaves i, j below an
/// internal node v, using range-minimum queries over the LCP array.
void fill_suffix_links(SuffixTree& st, const SuffixArray& sa, const LcpArray& lcp);

/// SA, LCP, tree and suffix links in one call.
SuffixTree build_suffix_tree(SymbolView text);

/// Suffix links reversed: the suffix-link tree rooted at the suffix-tree root.
struct SuffixLinkTreeView {
  std::vector<std::int32_t> offset;
  std::vector<NodeId> preds;

  std::span<const NodeId> children_of(NodeId v) const noexcept {
    auto b = static_cast<std::size_t>(offset[static_cast<std::size_t>(v)]);
    auto e = static_cast<std::size_t>(offset[static_cast<std::size_t>(v) + 1]);
    return std::span<const NodeId>(preds).subspan(b, e - b);
  }
  bool is_slt_leaf(NodeId v) const noexcept {
    return offset[static_cast<std::size_t>(v)] == offset[static_cast<std::size_t>(v) + 1];
  }
};

SuffixLinkTreeView slt_view(const SuffixTree& st);

}  // namespace textidx

#endif  // TEXTIDX_SUFFIX_BASE_HPP
