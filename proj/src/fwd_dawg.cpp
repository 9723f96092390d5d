#include "textidx/fwd_dawg.hpp"

#include <algorithm>

namespace textidx {

std::vector<char> black_st_nodes(const SuffixTree& st, const SuffixLinkTreeView& slt) {
  std::vector<char> black(st.size(), 0);
  if (st.size() == 0) return black;
  black[0] = 1;
  for (std::size_t v = 1; v < st.size(); ++v) {
    const auto count = st.nodes[v].leaf_count;
    bool b = true;
    for (NodeId a : slt.children_of(static_cast<NodeId>(v)))
      if (st[a].leaf_count == count) b = false;
    black[v] = b;
  }
  return black;
}

NodeId Ast::st_ancestor(NodeId v) const noexcept {
  if (is_original(v)) return v;
  return tree->nodes[static_cast<std::size_t>((*this)[v].owner)].parent;
}

Symbol Ast::first_symbol(NodeId v) const noexcept {
  return tree->text[static_cast<std::size_t>(edge_start(v))];
}

NodeId Ast::on_edge(NodeId x, std::int32_t depth) const noexcept {
  const std::int32_t full = (*this)[x].depth;
  if (depth == full) return x;
  const std::int32_t top = tree->nodes[static_cast<std::size_t>(tree->nodes[static_cast<std::size_t>(x)].parent)].depth;
  if (depth <= top || interior_base[static_cast<std::size_t>(x)] == kNoNode) return kNoNode;
  return interior_base[static_cast<std::size_t>(x)] + (depth - top - 1);
}

std::size_t Ast::black_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const AstNode& v) { return v.black; }));
}

Ast build_ast(const SuffixTree& st, std::span<const char> black) {
  Ast ast;
  ast.tree = &st;
  ast.st_count = st.size();
  ast.interior_base.assign(st.size(), kNoNode);
  ast.nodes.resize(st.size());
  for (std::size_t v = 0; v < st.size(); ++v) {
    const StNode& x = st.nodes[v];
    ast.nodes[v] = {x.parent, x.depth, x.start, static_cast<NodeId>(v), black[v] != 0};
    if (v != 0 && black[v]) check_structure(black[static_cast<std::size_t>(x.parent)] != 0,
                                            "AST: black node below a white node");
  }
  std::size_t inserted = 0;
  for (std::size_t v = 1; v < st.size(); ++v)
    if (black[v]) inserted += static_cast<std::size_t>(st.edge_length(static_cast<NodeId>(v)) - 1);
  ast.nodes.reserve(st.size() + inserted);
  for (std::size_t v = 1; v < st.size(); ++v) {
    if (!black[v]) continue;
    const NodeId x = static_cast<NodeId>(v);
    const std::int32_t len = st.edge_length(x);
    if (len <= 1) continue;
    const NodeId base = static_cast<NodeId>(ast.nodes.size());
    ast.interior_base[v] = base;
    NodeId up = st[x].parent;
    const std::int32_t top = st[up].depth;
    for (std::int32_t k = 1; k < len; ++k) {
      ast.nodes.push_back({up, top + k, st[x].start, x, true});
      up = static_cast<NodeId>(ast.nodes.size() - 1);
    }
    ast.nodes[v].parent = up;
  }

  // children: suffix-tree order, with the top interior node standing in for x
  const std::size_t total = ast.nodes.size();
  ast.child_offset.assign(total + 1, 0);
  for (std::size_t v = 1; v < total; ++v) ++ast.child_offset[static_cast<std::size_t>(ast.nodes[v].parent) + 1];
  for (std::size_t v = 0; v < total; ++v) ast.child_offset[v + 1] += ast.child_offset[v];
  ast.children.resize(total > 0 ? total - 1 : 0);
  for (std::size_t u = 0; u < st.size(); ++u) {
    auto pos = static_cast<std::size_t>(ast.child_offset[u]);
    for (NodeId c : st.children_of(static_cast<NodeId>(u))) {
      NodeId base = ast.interior_base[static_cast<std::size_t>(c)];
      ast.children[pos++] = base == kNoNode ? c : base;
    }
  }
  for (std::size_t v = st.size(); v < total; ++v) {
    // an interior node's single child is the next interior node or the owner
    const NodeId owner = ast.nodes[v].owner;
    const bool last = ast.nodes[v].depth + 1 == st[owner].depth;
    ast.children[static_cast<std::size_t>(ast.child_offset[v])] = last ? owner : static_cast<NodeId>(v + 1);
  }
  return ast;
}

std::vector<NodeId> suffix_chain(const SuffixTree& st, std::span<const char> black, NodeId x) {
  std::vector<NodeId> chain{x};
  NodeId s = x;
  do {
    s = st[s].slink;
    check_structure(s != kNoNode, "DAWG: suffix chain left the tree");
    chain.push_back(s);
    check_structure(chain.size() <= st.text.size() + 1, "DAWG: suffix chain longer than the text");
  } while (!black[static_cast<std::size_t>(s)]);
  return chain;
}

namespace {

bool same_block(const SuffixTree& st, NodeId prev, NodeId cur, BlockRule rule) {
  if (st.edge_length(prev) != st.edge_length(cur)) return false;
  if (rule == BlockRule::DepthOnly) return true;
  return st[st[prev].parent].leaf_count == st[st[cur].parent].leaf_count;
}

void check_monotone(const SuffixTree& st, std::span<const NodeId> chain) {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain[i] == SuffixTree::root()) break;
    check_structure(st.edge_length(chain[i]) <= st.edge_length(chain[i - 1]),
                    "DAWG: edge lengths along a suffix chain increase");
  }
}

}  // namespace

std::vector<std::int32_t> partition_chain(const SuffixTree& st, std::span<const NodeId> chain,
                                          BlockRule rule) {
  check_monotone(st, chain);
  std::vector<std::int32_t> heads;
  const std::size_t m = chain.size() - 1;
  for (std::size_t i = 0; i < m; ++i)
    if (i == 0 || !same_block(st, chain[i - 1], chain[i], rule)) heads.push_back(static_cast<std::int32_t>(i));
  return heads;
}

AstLinks ast_links(const Ast& ast, BlockRule rule) {
  const SuffixTree& st = *ast.tree;
  const std::size_t total = ast.size();
  AstLinks out;
  out.slink.assign(total, kNoNode);
  out.slink_label.assign(total, -1);
  out.edges.reserve(total + st.size());

  auto black = [&](NodeId v) { return ast[v].black; };
  auto set_link = [&](NodeId v, NodeId target, Symbol label) {
    auto& cur = out.slink[static_cast<std::size_t>(v)];
    auto& cur_label = out.slink_label[static_cast<std::size_t>(v)];
    if (cur != kNoNode) {
      check_structure(cur == target && cur_label == label, "DAWG: conflicting suffix links");
      return;
    }
    cur = target;
    cur_label = label;
  };
  auto climb = [&](NodeId v, std::int32_t depth) {
    while (ast[v].depth > depth) v = ast[v].parent;
    check_structure(ast[v].depth == depth && black(v), "DAWG: suffix-link target is not a black node");
    return v;
  };

  // the black trie
  for (std::size_t v = 1; v < total; ++v) {
    const NodeId x = static_cast<NodeId>(v);
    if (!black(x)) continue;
    check_structure(ast.edge_length(x) == 1, "DAWG: black edge longer than one symbol");
    out.edges.push_back({ast[x].parent, ast.first_symbol(x), x});
  }

  std::vector<NodeId> chain;
  std::vector<std::int32_t> d;
  std::vector<char> st_black(st.size());
  for (std::size_t v = 0; v < st.size(); ++v) st_black[v] = ast.nodes[v].black;

  for (std::size_t v = 1; v < st.size(); ++v) {
    const NodeId x = static_cast<NodeId>(v);
    if (!black(x)) continue;
    chain = suffix_chain(st, st_black, x);
    const std::size_t m = chain.size() - 1;
    d.resize(m);
    for (std::size_t i = 0; i < m; ++i) d[i] = st.edge_length(chain[i]);
    const auto heads = partition_chain(st, chain, rule);

    const std::int32_t xlen = st[x].depth;
    const std::int32_t xstart = st[x].start;
    auto sym = [&](std::int32_t k) { return st.text[static_cast<std::size_t>(xstart + k)]; };
    // P(t): node spelling the prefix of x of length |x| - t, for t < d[0]
    auto path = [&](std::int32_t t) { return ast.on_edge(x, xlen - t); };

    for (std::int32_t i : heads) {
      if (i == 0) continue;
      const NodeId s = chain[static_cast<std::size_t>(i)];
      const NodeId u = st[s].parent;
      const std::int32_t di = d[static_cast<std::size_t>(i)];
      check_structure(black(u), "DAWG: block source is white");
      out.edges.push_back({u, sym(xlen - di), path(di - 1)});
    }

    // suffix links of P(t): the first chain member whose edge no longer holds the suffix
    {
      NodeId w = chain[m];
      const Symbol label = sym(static_cast<std::int32_t>(m) - 1);
      const std::int32_t top = st[chain[m]].depth;
      for (std::int32_t t = 0; t < d[m - 1]; ++t) {
        w = climb(w, top - t);
        set_link(path(t), w, label);
      }
    }
    for (std::size_t j = 1; j < m; ++j) {
      if (d[j] == d[j - 1]) continue;
      const NodeId s = chain[j];
      NodeId w = st[s].parent;
      const Symbol label = sym(static_cast<std::int32_t>(j) - 1);
      for (std::int32_t t = d[j]; t < d[j - 1]; ++t) {
        w = climb(w, st[s].depth - t);
        set_link(path(t), w, label);
      }
    }
  }

  for (std::size_t v = 1; v < total; ++v)
    if (ast.nodes[v].black) check_structure(out.slink[v] != kNoNode, "DAWG: black node without a suffix link");
  return out;
}

Dawg dawg_from_ast(const Ast& ast, BlockRule rule) {
  const SuffixTree& st = *ast.tree;
  AstLinks links = ast_links(ast, rule);

  std::vector<NodeId> id(ast.size(), kNoNode);
  std::vector<DawgNode> nodes;
  nodes.reserve(ast.black_count());
  for (std::size_t v = 0; v < ast.size(); ++v) {
    if (!ast.nodes[v].black) continue;
    id[v] = static_cast<NodeId>(nodes.size());
    const AstNode& a = ast.nodes[v];
    nodes.push_back({a.depth, kNoNode, -1, a.start + a.depth});
  }
  for (std::size_t v = 0; v < ast.size(); ++v) {
    if (id[v] == kNoNode || links.slink[v] == kNoNode) continue;
    auto& node = nodes[static_cast<std::size_t>(id[v])];
    node.slink = id[static_cast<std::size_t>(links.slink[v])];
    node.slink_label = links.slink_label[v];
  }
  for (auto& e : links.edges) {
    e.source = id[static_cast<std::size_t>(e.source)];
    e.target = id[static_cast<std::size_t>(e.target)];
    check_structure(e.source != kNoNode && e.target != kNoNode, "DAWG: edge touches a white node");
  }
  const NodeId sink = st.text.size() > 0 ? id[static_cast<std::size_t>(st.leaf_of[0])] : 0;
  check_structure(sink != kNoNode, "DAWG: the whole text is not black");
  return assemble_dawg(std::move(nodes), links.edges, id[0], sink);
}

Dawg build_dawg(SymbolView text) {
  SuffixTree st = build_suffix_tree(text);
  auto black = black_st_nodes(st, slt_view(st));
  Ast ast = build_ast(st, black);
  return dawg_from_ast(ast);
}

}  // namespace textidx
