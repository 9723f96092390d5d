#include "textidx/dawg.hpp"

#include <algorithm>

namespace textidx {

namespace {

/// Stable counting sort of indices [0, count) by key(i) in [0, range).
template <class Key>
std::vector<std::int32_t> counting_order(std::size_t count, std::size_t range, Key key,
                                         std::span<const std::int32_t> input = {}) {
  std::vector<std::int32_t> bucket(range + 1, 0);
  auto item = [&](std::size_t k) {
    return input.empty() ? static_cast<std::int32_t>(k) : input[k];
  };
  for (std::size_t k = 0; k < count; ++k) ++bucket[static_cast<std::size_t>(key(item(k))) + 1];
  for (std::size_t c = 0; c < range; ++c) bucket[c + 1] += bucket[c];
  std::vector<std::int32_t> order(count);
  for (std::size_t k = 0; k < count; ++k) {
    auto i = item(k);
    order[static_cast<std::size_t>(bucket[static_cast<std::size_t>(key(i))]++)] = i;
  }
  return order;
}

}  // namespace

NodeId Dawg::next(NodeId v, Symbol c) const noexcept {
  auto es = out(v);
  auto it = std::lower_bound(es.begin(), es.end(), c,
                             [](const DawgEdge& e, Symbol s) { return e.symbol < s; });
  return it != es.end() && it->symbol == c ? it->target : kNoNode;
}

Dawg assemble_dawg(std::vector<DawgNode> nodes, std::span<const EdgeTriple> edges, NodeId source,
                   NodeId sink) {
  Dawg d;
  d.nodes = std::move(nodes);
  d.source = source;
  d.sink = sink;
  const std::size_t v_count = d.nodes.size();

  Symbol sigma = 0;
  for (const auto& e : edges) sigma = std::max(sigma, e.symbol + 1);
  for (const auto& v : d.nodes) sigma = std::max(sigma, v.slink_label + 1);

  auto by_symbol = counting_order(edges.size(), static_cast<std::size_t>(sigma),
                                  [&](std::int32_t k) { return edges[static_cast<std::size_t>(k)].symbol; });
  auto by_source = counting_order(
      edges.size(), v_count, [&](std::int32_t k) { return edges[static_cast<std::size_t>(k)].source; },
      by_symbol);

  d.edge_offset.assign(v_count + 1, 0);
  for (const auto& e : edges) ++d.edge_offset[static_cast<std::size_t>(e.source) + 1];
  for (std::size_t v = 0; v < v_count; ++v) d.edge_offset[v + 1] += d.edge_offset[v];
  d.edges.reserve(edges.size());
  for (std::int32_t k : by_source) {
    const auto& e = edges[static_cast<std::size_t>(k)];
    if (!d.edges.empty() && static_cast<std::int32_t>(d.edges.size()) > d.edge_offset[static_cast<std::size_t>(e.source)] &&
        d.edges.back().symbol == e.symbol)
      fail(ErrorCode::StructureCorrupt, "DAWG: two edges share a source and a symbol");
    d.edges.push_back({e.symbol, e.target});
  }

  // incoming suffix links, ordered by label
  std::vector<std::int32_t> linked;
  for (std::size_t v = 0; v < v_count; ++v)
    if (d.nodes[v].slink != kNoNode) linked.push_back(static_cast<std::int32_t>(v));
  auto by_label = counting_order(linked.size(), static_cast<std::size_t>(sigma),
                                 [&](std::int32_t v) { return d.nodes[static_cast<std::size_t>(v)].slink_label; },
                                 linked);
  auto by_target = counting_order(linked.size(), v_count,
                                  [&](std::int32_t v) { return d.nodes[static_cast<std::size_t>(v)].slink; },
                                  by_label);
  d.slink_in_offset.assign(v_count + 1, 0);
  for (std::int32_t v : linked) ++d.slink_in_offset[static_cast<std::size_t>(d.nodes[static_cast<std::size_t>(v)].slink) + 1];
  for (std::size_t v = 0; v < v_count; ++v) d.slink_in_offset[v + 1] += d.slink_in_offset[v];
  d.slink_in.assign(by_target.begin(), by_target.end());
  return d;
}

Dawg sort_dawg(Dawg d) {
  std::vector<EdgeTriple> triples;
  triples.reserve(d.edges.size());
  for (std::size_t v = 0; v < d.nodes.size(); ++v)
    for (const auto& e : d.out(static_cast<NodeId>(v)))
      triples.push_back({static_cast<NodeId>(v), e.symbol, e.target});
  return assemble_dawg(std::move(d.nodes), triples, d.source, d.sink);
}

bool is_edge_sorted(const Dawg& d) {
  for (std::size_t v = 0; v < d.nodes.size(); ++v) {
    auto es = d.out(static_cast<NodeId>(v));
    for (std::size_t k = 1; k < es.size(); ++k)
      if (es[k - 1].symbol >= es[k].symbol) return false;
  }
  return true;
}

}  // namespace textidx
