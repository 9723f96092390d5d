#include "textidx/affix.hpp"

#include <algorithm>

namespace textidx {

AffixTree build_affix_tree(const Ast& ast) {
  const SuffixTree& st = *ast.tree;
  const std::size_t total = ast.size();
  const std::int32_t n = static_cast<std::int32_t>(st.text.size());
  AstLinks links = ast_links(ast);

  AffixTree at;
  at.ast = &ast;
  at.reversed.assign(st.text.symbols.rbegin(), st.text.symbols.rend());
  at.back_parent.assign(total, kNoNode);
  for (std::size_t v = 1; v < total; ++v) {
    NodeId p = ast.is_original(static_cast<NodeId>(v)) ? st.nodes[v].slink : links.slink[v];
    check_structure(p != kNoNode, "affix tree: node without a suffix link");
    at.back_parent[v] = p;
  }

  // counting sort by the first reversed-label symbol, then stable by parent
  auto first = [&](std::size_t v) {
    const auto len = ast.nodes[v].depth - ast[at.back_parent[v]].depth;
    return st.text[static_cast<std::size_t>(ast.nodes[v].start + len - 1)];
  };
  std::vector<std::int32_t> bucket(static_cast<std::size_t>(st.text.sigma) + 1, 0);
  for (std::size_t v = 1; v < total; ++v) ++bucket[static_cast<std::size_t>(first(v)) + 1];
  for (std::size_t c = 0; c + 1 < bucket.size(); ++c) bucket[c + 1] += bucket[c];
  std::vector<NodeId> by_symbol(total > 0 ? total - 1 : 0);
  for (std::size_t v = 1; v < total; ++v)
    by_symbol[static_cast<std::size_t>(bucket[static_cast<std::size_t>(first(v))]++)] = static_cast<NodeId>(v);

  at.back_offset.assign(total + 1, 0);
  for (std::size_t v = 1; v < total; ++v) ++at.back_offset[static_cast<std::size_t>(at.back_parent[v]) + 1];
  for (std::size_t v = 0; v < total; ++v) at.back_offset[v + 1] += at.back_offset[v];
  at.back.resize(by_symbol.size());
  std::vector<std::int32_t> fill(at.back_offset.begin(), at.back_offset.end() - 1);
  for (NodeId v : by_symbol) {
    const NodeId p = at.back_parent[static_cast<std::size_t>(v)];
    const std::int32_t len = ast[v].depth - ast[p].depth;
    at.back[static_cast<std::size_t>(fill[static_cast<std::size_t>(p)]++)] = {n - ast[v].start - len, len, v};
  }
  return at;
}

std::optional<Locus> extend_right(const AffixTree& at, Locus l, Symbol b) {
  const Ast& ast = *at.ast;
  const SymbolView text = ast.tree->text;
  if (l.depth < ast[l.node].depth) {
    if (text[static_cast<std::size_t>(ast[l.node].start + l.depth)] != b) return std::nullopt;
    return Locus{l.node, l.depth + 1};
  }
  for (NodeId c : ast.children_of(l.node))
    if (ast.first_symbol(c) == b) return Locus{c, l.depth + 1};
  return std::nullopt;
}

std::optional<Locus> extend_left(const AffixTree& at, Locus l, Symbol a) {
  const Ast& ast = *at.ast;
  const SymbolView text = ast.tree->text;
  const auto& v = ast[l.node];
  if (l.depth < v.depth) {
    if (text[static_cast<std::size_t>(v.start + v.depth - l.depth - 1)] != a) return std::nullopt;
    return Locus{l.node, l.depth + 1};
  }
  for (const auto& e : at.backward_of(l.node))
    if (at.back_symbol(e) == a) return Locus{e.target, l.depth + 1};
  return std::nullopt;
}

std::optional<Locus> forward_locus(const AffixTree& at, std::span<const Symbol> w) {
  std::optional<Locus> l = Locus{0, 0};
  for (Symbol c : w)
    if (!(l = extend_right(at, *l, c))) break;
  return l;
}

std::optional<Locus> backward_locus(const AffixTree& at, std::span<const Symbol> w) {
  std::optional<Locus> l = Locus{0, 0};
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    if (!(l = extend_left(at, *l, *it))) break;
  return l;
}

std::size_t ModifiedWeinerLinks::implicit_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(links.begin(), links.end(), [](const auto& l) { return !l.explicit_link; }));
}

ModifiedWeinerLinks extract_mwl(const AffixTree& at, const WeinerLinks& wl) {
  const Ast& ast = *at.ast;
  const SuffixTree& st = *ast.tree;
  ModifiedWeinerLinks out;
  out.offset.assign(st.size() + 1, 0);
  out.links.reserve(wl.links.size());
  std::vector<Symbol> from_affix;
  for (std::size_t v = 0; v < st.size(); ++v) {
    const NodeId x = static_cast<NodeId>(v);
    from_affix.clear();
    for (const auto& e : at.backward_of(x)) {
      if (ast.is_original(e.target)) {
        check_structure(e.label_length == 1, "mWL: long backward edge between suffix-tree nodes");
        continue;
      }
      from_affix.push_back(at.back_symbol(e));
    }
    std::size_t k = 0;
    for (const WeinerLink& l : wl.of(x)) {
      if (l.explicit_link) {
        out.links.push_back({x, l.symbol, l.target, st[l.target].depth, true});
        continue;
      }
      check_structure(k < from_affix.size() && from_affix[k] == l.symbol,
                      "mWL: affix tree and Weiner links disagree");
      ++k;
      out.links.push_back({x, l.symbol, l.target, st[x].depth + 1, false});
    }
    check_structure(k == from_affix.size(), "mWL: affix tree and Weiner links disagree");
    out.offset[v + 1] = static_cast<std::int32_t>(out.links.size());
  }
  return out;
}

}  // namespace textidx
