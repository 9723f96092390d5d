#ifndef TEXTIDX_FWD_DAWG_HPP
#define TEXTIDX_FWD_DAWG_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "textidx/dawg.hpp"
#include "textidx/suffix_base.hpp"

namespace textidx {

/// Black flags over suffix-tree ids: x is black iff x is the longest member of
/// its end-position class. The root is black.
std::vector<char> black_st_nodes(const SuffixTree& st, const SuffixLinkTreeView& slt);

struct AstNode {
  NodeId parent = kNoNode;
  std::int32_t depth = 0;
  std::int32_t start = 0;     // 0-based start of one occurrence
  NodeId owner = kNoNode;     // suffix-tree node whose incoming edge holds this node
  bool black = false;
};

/// Suffix tree with every black position made explicit.
///
/// Ids [0, st_count) coincide with the suffix-tree ids; inserted nodes follow.
/// The interior positions of the edge into a black suffix-tree node x get the
/// consecutive ids interior_base[x], interior_base[x] + 1, ... top-down.
class Ast {
 public:
  const SuffixTree* tree = nullptr;
  std::vector<AstNode> nodes;
  std::vector<std::int32_t> child_offset;
  std::vector<NodeId> children;
  std::vector<NodeId> interior_base;
  std::size_t st_count = 0;

  std::size_t size() const noexcept { return nodes.size(); }
  const AstNode& operator[](NodeId v) const noexcept { return nodes[static_cast<std::size_t>(v)]; }
  bool is_original(NodeId v) const noexcept { return static_cast<std::size_t>(v) < st_count; }
  /// Nearest suffix-tree node at or above v.
  NodeId st_ancestor(NodeId v) const noexcept;
  std::span<const NodeId> children_of(NodeId v) const noexcept {
    auto b = static_cast<std::size_t>(child_offset[static_cast<std::size_t>(v)]);
    auto e = static_cast<std::size_t>(child_offset[static_cast<std::size_t>(v) + 1]);
    return std::span<const NodeId>(children).subspan(b, e - b);
  }
  std::int32_t edge_start(NodeId v) const noexcept {
    return (*this)[v].start + (*this)[(*this)[v].parent].depth;
  }
  std::int32_t edge_length(NodeId v) const noexcept {
    return (*this)[v].depth - (*this)[(*this)[v].parent].depth;
  }
  Symbol first_symbol(NodeId v) const noexcept;
  /// The node spelling the prefix of length `depth` of x, where x is the node
  /// with suffix-tree id `x` (depth within the edge into x).
  NodeId on_edge(NodeId x, std::int32_t depth) const noexcept;
  std::size_t black_count() const noexcept;
};

Ast build_ast(const SuffixTree& st, std::span<const char> black);

/// s_0 = x, s_{i+1} = slink(s_i), stopping at the first black node after x.
std::vector<NodeId> suffix_chain(const SuffixTree& st, std::span<const char> black, NodeId x);

/// How consecutive chain members are grouped.
enum class BlockRule {
  DepthAndCount,  // equal edge length and equal parent occurrence count
  DepthOnly,      // equal edge length only; not sufficient, kept for comparison
};

/// Block heads of a chain s_0..s_m (indices in [0, m)).
std::vector<std::int32_t> partition_chain(const SuffixTree& st, std::span<const NodeId> chain,
                                          BlockRule rule = BlockRule::DepthAndCount);

/// Per-node suffix links over AST ids (black non-root nodes only) and the
/// transitions between black nodes. Suffix links point to the longest suffix in
/// a different end-position class and are labeled by the first symbol of the
/// shortest member.
struct AstLinks {
  std::vector<NodeId> slink;
  std::vector<Symbol> slink_label;
  std::vector<EdgeTriple> edges;
};

AstLinks ast_links(const Ast& ast, BlockRule rule = BlockRule::DepthAndCount);

/// One node per black AST node, numbered in AST id order.
Dawg dawg_from_ast(const Ast& ast, BlockRule rule = BlockRule::DepthAndCount);

/// Text -> suffix tree -> AST -> DAWG.
Dawg build_dawg(SymbolView text);

}  // namespace textidx

#endif  // TEXTIDX_FWD_DAWG_HPP
