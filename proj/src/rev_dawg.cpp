#include "textidx/rev_dawg.hpp"

#include <algorithm>

namespace textidx {

NodeId WeinerLinks::find(NodeId v, Symbol c) const noexcept {
  auto ls = of(v);
  auto it = std::lower_bound(ls.begin(), ls.end(), c,
                             [](const WeinerLink& l, Symbol s) { return l.symbol < s; });
  return it != ls.end() && it->symbol == c ? it->target : kNoNode;
}

std::size_t WeinerLinks::explicit_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(links.begin(), links.end(), [](const WeinerLink& l) { return l.explicit_link; }));
}

WeinerLinks group_weiner_links(std::span<const WeinerLink> links, std::size_t node_count) {
  Symbol sigma = 0;
  for (const auto& l : links) sigma = std::max(sigma, l.symbol + 1);

  std::vector<std::int32_t> bucket(static_cast<std::size_t>(sigma) + 1, 0);
  for (const auto& l : links) ++bucket[static_cast<std::size_t>(l.symbol) + 1];
  for (std::size_t c = 0; c < static_cast<std::size_t>(sigma); ++c) bucket[c + 1] += bucket[c];
  std::vector<WeinerLink> by_symbol(links.size());
  for (const auto& l : links) by_symbol[static_cast<std::size_t>(bucket[static_cast<std::size_t>(l.symbol)]++)] = l;

  WeinerLinks out;
  out.offset.assign(node_count + 1, 0);
  for (const auto& l : links) ++out.offset[static_cast<std::size_t>(l.source) + 1];
  for (std::size_t v = 0; v < node_count; ++v) out.offset[v + 1] += out.offset[v];
  out.links.resize(links.size());
  std::vector<std::int32_t> fill(out.offset.begin(), out.offset.end() - 1);
  for (const auto& l : by_symbol) out.links[static_cast<std::size_t>(fill[static_cast<std::size_t>(l.source)]++)] = l;

  for (std::size_t v = 0; v < node_count; ++v) {
    auto ls = out.of(static_cast<NodeId>(v));
    for (std::size_t k = 1; k < ls.size(); ++k)
      check_structure(ls[k - 1].symbol != ls[k].symbol, "Weiner links: (node, symbol) written twice");
  }
  return out;
}

WeinerLinks explicit_weiner(const SuffixTree& st) {
  std::vector<WeinerLink> links;
  links.reserve(st.size());
  for (std::size_t v = 1; v < st.size(); ++v) {
    const StNode& x = st.nodes[v];
    check_structure(x.slink != kNoNode, "Weiner links: suffix link missing");
    links.push_back({x.slink, st.text[static_cast<std::size_t>(x.start)], static_cast<NodeId>(v), true});
  }
  return group_weiner_links(links, st.size());
}

WeinerLinks implicit_weiner(const SuffixTree& st, const WeinerLinks& explicit_links) {
  std::vector<WeinerLink> links;
  links.reserve(3 * st.text.size());
  links.assign(explicit_links.links.begin(), explicit_links.links.end());
  for (const WeinerLink& l : explicit_links.links) {
    const NodeId w = l.source;
    const NodeId aw = l.target;
    const NodeId aw_parent = st[aw].parent;
    const std::int32_t floor = st[aw_parent].depth;
    NodeId p = st[w].parent;
    while (p != kNoNode && st[p].depth >= floor) {
      links.push_back({p, l.symbol, aw, false});
      p = st[p].parent;
    }
    // the walk must stop exactly at the node whose explicit link reaches parent(aw)
    if (aw_parent != SuffixTree::root())
      check_structure(p == st[aw_parent].slink, "Weiner links: parent walk ended at the wrong node");
  }
  return group_weiner_links(links, st.size());
}

Dawg assemble_reversed_dawg(const SuffixTree& st, const WeinerLinks& wl) {
  const std::int32_t n = static_cast<std::int32_t>(st.text.size());
  std::vector<DawgNode> nodes(st.size());
  for (std::size_t v = 0; v < st.size(); ++v) {
    const StNode& x = st.nodes[v];
    nodes[v].len = x.depth;
    nodes[v].end_pos = n - x.start;
    if (v != 0) {
      nodes[v].slink = x.parent;
      nodes[v].slink_label = st.first_symbol(static_cast<NodeId>(v));
    }
  }
  std::vector<EdgeTriple> edges;
  edges.reserve(wl.links.size());
  for (const auto& l : wl.links) edges.push_back({l.source, l.symbol, l.target});
  NodeId sink = n > 0 ? st.leaf_of[0] : SuffixTree::root();
  return assemble_dawg(std::move(nodes), edges, SuffixTree::root(), sink);
}

Dawg build_reversed_dawg(const SuffixTree& st) {
  return assemble_reversed_dawg(st, implicit_weiner(st, explicit_weiner(st)));
}

}  // namespace textidx
