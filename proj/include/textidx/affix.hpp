#ifndef TEXTIDX_AFFIX_HPP
#define TEXTIDX_AFFIX_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "textidx/fwd_dawg.hpp"
#include "textidx/rev_dawg.hpp"

namespace textidx {

/// Backward edge u -> v: v's string is (label reversed) . u's string. The label is
/// an interval of the reversed text.
struct BackwardEdge {
  std::int32_t label_start;
  std::int32_t label_length;
  NodeId target;
};

/// Bidirectional index over the AST node set.
///
/// Forward edges are the AST edges. The backward parent of a node is the longest
/// proper suffix of its string that is itself a node; backward edges reverse
/// those links. `reversed` is the full reversal of the text, sentinel first.
class AffixTree {
 public:
  const Ast* ast = nullptr;
  std::vector<Symbol> reversed;
  std::vector<NodeId> back_parent;
  std::vector<std::int32_t> back_offset;
  std::vector<BackwardEdge> back;

  std::size_t size() const noexcept { return back_parent.size(); }
  std::int32_t depth(NodeId v) const noexcept { return (*ast)[v].depth; }
  std::span<const NodeId> forward_of(NodeId v) const noexcept { return ast->children_of(v); }
  std::span<const BackwardEdge> backward_of(NodeId v) const noexcept {
    auto b = static_cast<std::size_t>(back_offset[static_cast<std::size_t>(v)]);
    auto e = static_cast<std::size_t>(back_offset[static_cast<std::size_t>(v) + 1]);
    return std::span<const BackwardEdge>(back).subspan(b, e - b);
  }
  Symbol back_symbol(const BackwardEdge& e, std::int32_t k = 0) const noexcept {
    return reversed[static_cast<std::size_t>(e.label_start + k)];
  }
};

/// Backward children sorted by the first symbol of the reversed label.
AffixTree build_affix_tree(const Ast& ast);

/// A position in one of the two trees: `depth` symbols along the edge into `node`.
struct Locus {
  NodeId node;
  std::int32_t depth;
  friend bool operator==(const Locus&, const Locus&) = default;
};

/// Reads w from the root along forward edges.
std::optional<Locus> forward_locus(const AffixTree& at, std::span<const Symbol> w);
/// Reads w right to left from the root along backward edges.
std::optional<Locus> backward_locus(const AffixTree& at, std::span<const Symbol> w);
/// w -> w.b on the forward side.
std::optional<Locus> extend_right(const AffixTree& at, Locus l, Symbol b);
/// w -> a.w on the backward side.
std::optional<Locus> extend_left(const AffixTree& at, Locus l, Symbol a);
/// Node at a locus, or kNoNode when the locus lies inside an edge.
inline NodeId node_at(const AffixTree& at, Locus l) {
  return at.depth(l.node) == l.depth ? l.node : kNoNode;
}

/// (x, a, ax) for suffix-tree nodes x; the target is the position of ax in the
/// suffix tree: `depth` symbols down the edge into suffix-tree node `target`.
struct ModifiedWeinerLink {
  NodeId source;
  Symbol symbol;
  NodeId target;
  std::int32_t depth;
  bool explicit_link;  // ax is a suffix-tree node
};

struct ModifiedWeinerLinks {
  std::vector<std::int32_t> offset;
  std::vector<ModifiedWeinerLink> links;

  std::span<const ModifiedWeinerLink> of(NodeId v) const noexcept {
    auto b = static_cast<std::size_t>(offset[static_cast<std::size_t>(v)]);
    auto e = static_cast<std::size_t>(offset[static_cast<std::size_t>(v) + 1]);
    return std::span<const ModifiedWeinerLink>(links).subspan(b, e - b);
  }
  std::size_t implicit_count() const noexcept;
};

/// Implicit links come from backward edges that leave a suffix-tree node and
/// enter a non-suffix-tree node (the symbol is the last one of the reversed
/// label); the suffix-tree locus of ax is taken from the matching Weiner link.
/// The two routes must agree on the (x, a) pairs, otherwise StructureCorrupt.
ModifiedWeinerLinks extract_mwl(const AffixTree& at, const WeinerLinks& wl);

}  // namespace textidx

#endif  // TEXTIDX_AFFIX_HPP
