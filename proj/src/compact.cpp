#include "textidx/compact.hpp"

#include <algorithm>

namespace textidx {

namespace {

/// Offsets for edges already grouped by source in ascending source order.
std::vector<std::int32_t> offsets_of(std::size_t node_count, std::span<const NodeId> sources) {
  std::vector<std::int32_t> off(node_count + 1, 0);
  for (NodeId s : sources) ++off[static_cast<std::size_t>(s) + 1];
  for (std::size_t v = 0; v < node_count; ++v) off[v + 1] += off[v];
  return off;
}

/// Node ids sorted by decreasing key, key in [0, range].
template <class Key>
std::vector<NodeId> by_decreasing(std::size_t count, std::int32_t range, Key key) {
  std::vector<std::int32_t> bucket(static_cast<std::size_t>(range) + 2, 0);
  for (std::size_t v = 0; v < count; ++v) ++bucket[static_cast<std::size_t>(range - key(v)) + 1];
  for (std::size_t c = 0; c + 1 < bucket.size(); ++c) bucket[c + 1] += bucket[c];
  std::vector<NodeId> order(count);
  for (std::size_t v = 0; v < count; ++v)
    order[static_cast<std::size_t>(bucket[static_cast<std::size_t>(range - key(v))]++)] = static_cast<NodeId>(v);
  return order;
}

}  // namespace

Cdawg cdawg_from_dawg(const Dawg& d) {
  const std::size_t count = d.node_count();
  std::vector<char> kept(count, 0);
  for (std::size_t v = 0; v < count; ++v) kept[v] = d.out(static_cast<NodeId>(v)).size() >= 2;
  kept[static_cast<std::size_t>(d.source)] = 1;
  for (NodeId v = d.sink; v != kNoNode; v = d[v].slink) kept[static_cast<std::size_t>(v)] = 1;

  std::int32_t max_len = 0;
  for (const auto& v : d.nodes) max_len = std::max(max_len, v.len);
  // every edge goes to a strictly longer node, so decreasing length is a reverse topological order
  std::vector<NodeId> dest(count, kNoNode);
  std::vector<std::int32_t> steps(count, 0);
  for (NodeId v : by_decreasing(count, max_len, [&](std::size_t v) { return d.nodes[v].len; })) {
    const auto i = static_cast<std::size_t>(v);
    if (kept[i]) {
      dest[i] = v;
      continue;
    }
    auto out = d.out(v);
    check_structure(out.size() == 1, "CDAWG: contracted node without a unique successor");
    const auto t = static_cast<std::size_t>(out[0].target);
    dest[i] = dest[t];
    steps[i] = steps[t] + 1;
  }

  Cdawg c;
  std::vector<NodeId> id(count, kNoNode);
  std::size_t kept_edges = 0;
  for (std::size_t v = 0; v < count; ++v) {
    if (!kept[v]) continue;
    kept_edges += d.out(static_cast<NodeId>(v)).size();
    id[v] = static_cast<NodeId>(c.nodes.size());
    c.nodes.push_back({d.nodes[v].len, d.nodes[v].end_pos, static_cast<NodeId>(v)});
  }
  c.source = id[static_cast<std::size_t>(d.source)];
  c.sink = id[static_cast<std::size_t>(d.sink)];
  std::vector<NodeId> sources;
  sources.reserve(kept_edges);
  c.edges.reserve(kept_edges);
  for (std::size_t v = 0; v < count; ++v) {
    if (!kept[v]) continue;
    for (const auto& e : d.out(static_cast<NodeId>(v))) {
      const auto t = static_cast<std::size_t>(e.target);
      const NodeId w = dest[t];
      const std::int32_t length = steps[t] + 1;
      c.edges.push_back({e.symbol, d[w].end_pos - length, length, id[static_cast<std::size_t>(w)]});
      sources.push_back(id[v]);
    }
  }
  c.edge_offset = offsets_of(c.nodes.size(), sources);
  return c;
}

SymmetricCdawg build_symmetric_cdawg(const SuffixTree& st, const Dawg& rd) {
  const std::size_t count = st.size();
  check_structure(rd.node_count() == count, "symmetric CDAWG: node sets differ");
  const NodeId whole = st.leaf_of[0];

  // maximal repeats: internal nodes not always preceded by one symbol
  std::vector<char> kept(count, 0);
  kept[0] = 1;
  kept[static_cast<std::size_t>(whole)] = 1;
  for (std::size_t v = 1; v < count; ++v) {
    const NodeId x = static_cast<NodeId>(v);
    if (st.is_leaf(x)) continue;
    auto out = rd.out(x);
    kept[v] = !(out.size() == 1 && st[out[0].target].leaf_count == st[x].leaf_count);
  }

  SymmetricCdawg s;
  std::vector<NodeId> id(count, kNoNode);
  for (std::size_t v = 0; v < count; ++v)
    if (kept[v]) {
      id[v] = static_cast<NodeId>(s.st_node.size());
      s.st_node.push_back(static_cast<NodeId>(v));
    }

  // rrep(v): follow the unique equal-count left extension up to a kept node
  std::int32_t max_depth = 0;
  for (const auto& v : st.nodes) max_depth = std::max(max_depth, v.depth);
  std::vector<NodeId> rrep(count, kNoNode);
  for (NodeId v : by_decreasing(count, max_depth, [&](std::size_t v) { return st.nodes[v].depth; })) {
    const auto i = static_cast<std::size_t>(v);
    if (kept[i]) {
      rrep[i] = v;
      continue;
    }
    auto out = rd.out(v);
    check_structure(out.size() == 1 && st[out[0].target].leaf_count == st[v].leaf_count,
                    "symmetric CDAWG: non-maximal node without a unique extension");
    rrep[i] = rrep[static_cast<std::size_t>(out[0].target)];
  }

  Cdawg& f = s.forward;
  std::vector<NodeId> sources;
  for (NodeId x : s.st_node) {
    f.nodes.push_back({st[x].depth, st[x].start + st[x].depth, x});
    for (NodeId c : st.children_of(x)) {
      f.edges.push_back({st.first_symbol(c), st.edge_start(c), st.edge_length(c),
                         id[static_cast<std::size_t>(rrep[static_cast<std::size_t>(c)])]});
      sources.push_back(id[static_cast<std::size_t>(x)]);
    }
  }
  f.edge_offset = offsets_of(f.nodes.size(), sources);
  f.source = id[0];
  f.sink = id[static_cast<std::size_t>(whole)];

  Cdawg b = cdawg_from_dawg(rd);
  check_structure(b.node_count() == s.node_count(), "symmetric CDAWG: compactions keep different nodes");
  Cdawg& r = s.backward;
  r.nodes.resize(b.node_count());
  std::vector<NodeId> remap(b.node_count());
  for (std::size_t v = 0; v < b.node_count(); ++v) {
    const NodeId shared = id[static_cast<std::size_t>(b.nodes[v].origin)];
    check_structure(shared != kNoNode, "symmetric CDAWG: compactions keep different nodes");
    remap[v] = shared;
    r.nodes[static_cast<std::size_t>(shared)] = b.nodes[v];
  }
  // ids of b are increasing in origin, as are shared ids, so grouping order is kept
  sources.clear();
  for (std::size_t v = 0; v < b.node_count(); ++v)
    for (const auto& e : b.out(static_cast<NodeId>(v))) {
      r.edges.push_back({e.symbol, e.start, e.length, remap[static_cast<std::size_t>(e.target)]});
      sources.push_back(remap[v]);
    }
  r.edge_offset = offsets_of(r.nodes.size(), sources);
  r.source = remap[static_cast<std::size_t>(b.source)];
  r.sink = remap[static_cast<std::size_t>(b.sink)];
  return s;
}

LsTrie build_lstrie(const SuffixTree& st, const ModifiedWeinerLinks& mwl) {
  const std::size_t count = st.size();
  std::vector<const ModifiedWeinerLink*> type2;
  std::int32_t max_depth = 0;
  for (const auto& l : mwl.links) {
    if (l.explicit_link) continue;
    const std::int32_t top = st[st[l.target].parent].depth;
    check_structure(l.target != SuffixTree::root() && top < l.depth && l.depth < st[l.target].depth,
                    "LST: implicit target not inside an edge");
    type2.push_back(&l);
    max_depth = std::max(max_depth, l.depth);
  }
  // radix sort by (edge owner, depth)
  {
    std::vector<std::int32_t> bucket(static_cast<std::size_t>(max_depth) + 2, 0);
    for (auto* l : type2) ++bucket[static_cast<std::size_t>(l->depth) + 1];
    for (std::size_t c = 0; c + 1 < bucket.size(); ++c) bucket[c + 1] += bucket[c];
    std::vector<const ModifiedWeinerLink*> tmp(type2.size());
    for (auto* l : type2) tmp[static_cast<std::size_t>(bucket[static_cast<std::size_t>(l->depth)]++)] = l;
    std::vector<std::int32_t> owner(count + 1, 0);
    for (auto* l : tmp) ++owner[static_cast<std::size_t>(l->target) + 1];
    for (std::size_t v = 0; v < count; ++v) owner[v + 1] += owner[v];
    for (auto* l : tmp) type2[static_cast<std::size_t>(owner[static_cast<std::size_t>(l->target)]++)] = l;
  }

  LsTrie t;
  t.st_count = count;
  t.nodes.resize(count);
  for (std::size_t v = 0; v < count; ++v) {
    const StNode& x = st.nodes[v];
    t.nodes[v] = {x.parent, x.depth, x.start, x.slink, static_cast<NodeId>(v), false};
  }
  std::vector<NodeId> top_of(count, kNoNode);  // first type-2 node on the edge into v
  for (std::size_t k = 0; k < type2.size(); ++k) {
    const auto* l = type2[k];
    const NodeId w = l->target;
    const NodeId id = static_cast<NodeId>(t.nodes.size());
    const bool first_on_edge = k == 0 || type2[k - 1]->target != w;
    if (!first_on_edge) check_structure(type2[k - 1]->depth < l->depth, "LST: two links reach one position");
    const NodeId parent = first_on_edge ? st[w].parent : id - 1;
    if (first_on_edge) top_of[static_cast<std::size_t>(w)] = id;
    t.nodes.push_back({parent, l->depth, st[w].start, l->source, w, true});
    t.nodes[static_cast<std::size_t>(w)].parent = id;
  }

  const std::size_t total = t.nodes.size();
  std::vector<NodeId> sources;
  sources.reserve(total);
  auto add_edge = [&](NodeId from, NodeId to) {
    const auto& v = t[to];
    const std::int32_t pos = v.start + t[from].depth;
    t.edges.push_back({st.text[static_cast<std::size_t>(pos)], pos, to});
    sources.push_back(from);
  };
  for (std::size_t u = 0; u < count; ++u)
    for (NodeId c : st.children_of(static_cast<NodeId>(u))) {
      const NodeId top = top_of[static_cast<std::size_t>(c)];
      add_edge(static_cast<NodeId>(u), top == kNoNode ? c : top);
    }
  for (std::size_t v = count; v < total; ++v) {
    const NodeId w = t.nodes[v].st_node;
    const bool last = v + 1 == total || t.nodes[v + 1].st_node != w;
    add_edge(static_cast<NodeId>(v), last ? w : static_cast<NodeId>(v + 1));
  }
  // edges were produced source by source except that type-2 sources come last
  t.edge_offset = offsets_of(total, sources);
  return t;
}

}  // namespace textidx
