#include "textidx/export.hpp"

#include <cstdio>
#include <sstream>

namespace textidx {

using nlohmann::json;

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (unsigned char c : s) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(static_cast<char>(c));
    } else if (c < 0x20 || c >= 0x7f) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\\\x%02x", c);
      out += buf;
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

std::string slice(const Text& t, std::span<const Symbol> seq, std::int32_t start, std::int32_t length) {
  return escape(t.render(seq.subspan(static_cast<std::size_t>(start), static_cast<std::size_t>(length))));
}

bool spell(const Text& t) { return t.size() <= kDotStringLimit; }

json symbol_json(const Text& t, Symbol c) {
  return c == kSentinel ? json(nullptr) : json(t.original(c));
}

std::string header(const std::string& name) {
  return "digraph " + name + " {\n  node [shape=circle, fontname=\"monospace\"];\n  edge [fontname=\"monospace\"];\n";
}

}  // namespace

std::string dot_suffix_tree(const SuffixTree& st, const Text& t) {
  std::ostringstream os;
  os << header("suffix_tree");
  const auto seq = st.text.symbols;
  for (std::size_t v = 0; v < st.size(); ++v) {
    const auto& x = st.nodes[v];
    os << "  n" << v << " [label=\"";
    if (spell(t))
      os << (x.depth ? slice(t, seq, x.start, x.depth) : "&epsilon;");
    else
      os << v;
    os << "\"" << (st.is_leaf(static_cast<NodeId>(v)) ? ", shape=box" : "") << "];\n";
  }
  for (std::size_t v = 1; v < st.size(); ++v) {
    const NodeId x = static_cast<NodeId>(v);
    os << "  n" << st[x].parent << " -> n" << v << " [label=\""
       << slice(t, seq, st.edge_start(x), st.edge_length(x)) << "\"];\n";
  }
  for (std::size_t v = 1; v < st.size(); ++v)
    if (st.nodes[v].slink != kNoNode)
      os << "  n" << v << " -> n" << st.nodes[v].slink << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

std::string dot_dawg(const Dawg& d, std::span<const Symbol> indexed, const Text& t, const std::string& name) {
  std::ostringstream os;
  os << header(name);
  for (std::size_t v = 0; v < d.node_count(); ++v) {
    const auto& x = d.nodes[v];
    const NodeId id = static_cast<NodeId>(v);
    os << "  n" << v << " [label=\"";
    if (spell(t) && x.len > 0)
      os << slice(t, indexed, x.end_pos - x.len, x.len) << "\\n";
    else if (!spell(t))
      os << v << "\\n";
    os << x.len << "/" << d.shortlen(id) << "\"" << (id == d.sink ? ", shape=doublecircle" : "") << "];\n";
  }
  for (std::size_t v = 0; v < d.node_count(); ++v)
    for (const auto& e : d.out(static_cast<NodeId>(v)))
      os << "  n" << v << " -> n" << e.target << " [label=\"" << escape(t.render(std::span(&e.symbol, 1)))
         << "\"];\n";
  for (std::size_t v = 0; v < d.node_count(); ++v) {
    const auto& x = d.nodes[v];
    if (x.slink == kNoNode) continue;
    os << "  n" << v << " -> n" << x.slink << " [style=dashed, constraint=false, label=\""
       << escape(t.render(std::span(&x.slink_label, 1))) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string dot_affix(const AffixTree& at, const Text& t) {
  const Ast& ast = *at.ast;
  const auto seq = ast.tree->text.symbols;
  std::ostringstream os;
  os << header("affix_tree");
  for (std::size_t v = 0; v < ast.size(); ++v) {
    const auto& x = ast.nodes[v];
    os << "  n" << v << " [label=\"";
    if (spell(t))
      os << (x.depth ? slice(t, seq, x.start, x.depth) : "&epsilon;");
    else
      os << v;
    os << "\"" << (x.black ? ", style=filled, fillcolor=gray" : "") << "];\n";
  }
  for (std::size_t v = 1; v < ast.size(); ++v) {
    const NodeId x = static_cast<NodeId>(v);
    os << "  n" << ast[x].parent << " -> n" << v << " [label=\""
       << slice(t, seq, ast.edge_start(x), ast.edge_length(x)) << "\"];\n";
  }
  for (std::size_t v = 0; v < ast.size(); ++v)
    for (const auto& e : at.backward_of(static_cast<NodeId>(v)))
      os << "  n" << v << " -> n" << e.target << " [color=\"black:white:black\", constraint=false, label=\""
         << slice(t, at.reversed, e.label_start, e.label_length) << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

void cdawg_body(std::ostringstream& os, const Cdawg& c, std::span<const Symbol> indexed, const Text& t,
                const std::string& prefix, const std::string& style) {
  for (std::size_t v = 0; v < c.node_count(); ++v)
    for (const auto& e : c.out(static_cast<NodeId>(v)))
      os << "  " << prefix << v << " -> " << prefix << e.target << " [label=\""
         << slice(t, indexed, e.start, e.length) << "\"" << style << "];\n";
}

void cdawg_nodes(std::ostringstream& os, const Cdawg& c, std::span<const Symbol> indexed, const Text& t,
                 const std::string& prefix) {
  for (std::size_t v = 0; v < c.node_count(); ++v) {
    const auto& x = c.nodes[v];
    os << "  " << prefix << v << " [label=\"";
    if (spell(t))
      os << (x.len ? slice(t, indexed, x.end_pos - x.len, x.len) : "&epsilon;");
    else
      os << v;
    os << "\"" << (static_cast<NodeId>(v) == c.sink ? ", shape=doublecircle" : "") << "];\n";
  }
}

}  // namespace

std::string dot_cdawg(const Cdawg& c, std::span<const Symbol> indexed, const Text& t, const std::string& name) {
  std::ostringstream os;
  os << header(name);
  cdawg_nodes(os, c, indexed, t, "n");
  cdawg_body(os, c, indexed, t, "n", "");
  os << "}\n";
  return os.str();
}

std::string dot_symmetric_cdawg(const SymmetricCdawg& s, const Text& t, std::span<const Symbol> reversed) {
  std::ostringstream os;
  os << header("symmetric_cdawg");
  cdawg_nodes(os, s.forward, t.symbols(), t, "n");
  cdawg_body(os, s.forward, t.symbols(), t, "n", "");
  cdawg_body(os, s.backward, reversed, t, "n", ", style=dashed");
  os << "}\n";
  return os.str();
}

std::string dot_lstrie(const LsTrie& ls, const Text& t) {
  std::ostringstream os;
  os << header("linear_size_suffix_trie");
  const auto seq = t.symbols();
  for (std::size_t v = 0; v < ls.size(); ++v) {
    const auto& x = ls.nodes[v];
    os << "  n" << v << " [label=\"";
    if (spell(t))
      os << (x.depth ? slice(t, seq, x.start, x.depth) : "&epsilon;");
    else
      os << v;
    os << "\"" << (x.type2 ? ", style=striped" : "") << "];\n";
  }
  for (std::size_t v = 0; v < ls.size(); ++v)
    for (const auto& e : ls.out(static_cast<NodeId>(v)))
      os << "  n" << v << " -> n" << e.target << " [label=\"" << escape(t.render(std::span(&e.symbol, 1)))
         << "\"];\n";
  for (std::size_t v = ls.st_count; v < ls.size(); ++v)
    os << "  n" << v << " -> n" << ls.nodes[v].slink << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

json json_suffix_tree(const SuffixTree& st, const Text& t) {
  json nodes = json::array();
  for (std::size_t v = 0; v < st.size(); ++v) {
    const auto& x = st.nodes[v];
    json children = json::array();
    for (NodeId c : st.children_of(static_cast<NodeId>(v))) children.push_back(c);
    nodes.push_back({{"id", v},
                     {"parent", x.parent},
                     {"depth", x.depth},
                     {"start", x.start + 1},
                     {"leaf_count", x.leaf_count},
                     {"suffix", x.suffix >= 0 ? json(x.suffix + 1) : json(nullptr)},
                     {"slink", x.slink == kNoNode ? json(nullptr) : json(x.slink)},
                     {"children", children}});
  }
  return {{"schema", 1}, {"kind", "suffix_tree"}, {"n", t.size()}, {"nodes", nodes}};
}

json json_dawg(const Dawg& d, const Text& t) {
  json nodes = json::array();
  for (std::size_t v = 0; v < d.node_count(); ++v) {
    const auto& x = d.nodes[v];
    json edges = json::array();
    for (const auto& e : d.out(static_cast<NodeId>(v))) edges.push_back({symbol_json(t, e.symbol), e.target});
    nodes.push_back({{"id", v},
                     {"len", x.len},
                     {"shortlen", d.shortlen(static_cast<NodeId>(v))},
                     {"end_pos", x.end_pos},
                     {"slink", x.slink == kNoNode ? json(nullptr) : json(x.slink)},
                     {"slink_label", x.slink == kNoNode ? json(nullptr) : symbol_json(t, x.slink_label)},
                     {"edges", edges}});
  }
  return {{"schema", 1}, {"kind", "dawg"}, {"source", d.source}, {"sink", d.sink}, {"nodes", nodes}};
}

json json_affix(const AffixTree& at, const Text& t) {
  const Ast& ast = *at.ast;
  json nodes = json::array();
  for (std::size_t v = 0; v < ast.size(); ++v) {
    const auto& x = ast.nodes[v];
    json forward = json::array();
    for (NodeId c : ast.children_of(static_cast<NodeId>(v)))
      forward.push_back({{"start", ast.edge_start(c) + 1}, {"length", ast.edge_length(c)}, {"target", c}});
    json backward = json::array();
    for (const auto& e : at.backward_of(static_cast<NodeId>(v)))
      backward.push_back({{"start", e.label_start + 1}, {"length", e.label_length}, {"target", e.target}});
    nodes.push_back({{"id", v},
                     {"depth", x.depth},
                     {"start", x.start + 1},
                     {"black", x.black},
                     {"suffix_tree_node", ast.is_original(static_cast<NodeId>(v))},
                     {"forward", forward},
                     {"backward", backward}});
  }
  return {{"schema", 1}, {"kind", "affix_tree"}, {"n", t.size()}, {"nodes", nodes}};
}

namespace {

json cdawg_nodes_json(const Cdawg& c, std::span<const Symbol> indexed, const Text& t) {
  json nodes = json::array();
  for (std::size_t v = 0; v < c.node_count(); ++v) {
    json edges = json::array();
    for (const auto& e : c.out(static_cast<NodeId>(v))) {
      json label = json::array();
      for (std::int32_t k = 0; k < e.length; ++k)
        label.push_back(symbol_json(t, indexed[static_cast<std::size_t>(e.start + k)]));
      edges.push_back({{"start", e.start + 1}, {"length", e.length}, {"label", label}, {"target", e.target}});
    }
    nodes.push_back({{"id", v}, {"len", c.nodes[v].len}, {"end_pos", c.nodes[v].end_pos}, {"edges", edges}});
  }
  return nodes;
}

}  // namespace

json json_cdawg(const Cdawg& c, std::span<const Symbol> indexed, const Text& t) {
  return {{"schema", 1},
          {"kind", "cdawg"},
          {"source", c.source},
          {"sink", c.sink},
          {"nodes", cdawg_nodes_json(c, indexed, t)}};
}

json json_symmetric_cdawg(const SymmetricCdawg& s, const Text& t, std::span<const Symbol> reversed) {
  return {{"schema", 1},
          {"kind", "symmetric_cdawg"},
          {"source", s.forward.source},
          {"sink", s.forward.sink},
          {"suffix_tree_node", s.st_node},
          {"forward", cdawg_nodes_json(s.forward, t.symbols(), t)},
          {"backward", cdawg_nodes_json(s.backward, reversed, t)}};
}

json json_lstrie(const LsTrie& ls, const Text& t) {
  json nodes = json::array();
  for (std::size_t v = 0; v < ls.size(); ++v) {
    const auto& x = ls.nodes[v];
    json edges = json::array();
    for (const auto& e : ls.out(static_cast<NodeId>(v)))
      edges.push_back({{"symbol", symbol_json(t, e.symbol)}, {"witness", e.witness + 1}, {"target", e.target}});
    nodes.push_back({{"id", v},
                     {"depth", x.depth},
                     {"type", x.type2 ? 2 : 1},
                     {"slink", x.slink == kNoNode ? json(nullptr) : json(x.slink)},
                     {"edges", edges}});
  }
  return {{"schema", 1}, {"kind", "linear_size_suffix_trie"}, {"nodes", nodes}};
}

std::string maw_tsv(const MawSet& ms, bool words) {
  const Text& t = *ms.text;
  std::string out;
  auto value = [&](std::int64_t v) {
    if (!t.bytes()) return std::to_string(v);
    return v > 0x20 && v < 0x7f ? std::string(1, static_cast<char>(v)) : escape(std::string(1, static_cast<char>(v)));
  };
  for (const auto& m : ms.triples) {
    out += std::to_string(m.i) + '\t' + std::to_string(m.j) + '\t' + value(t.original(m.b));
    if (words) {
      auto w = decode_interval(t, static_cast<std::size_t>(m.i), static_cast<std::size_t>(m.j));
      w.push_back(t.original(m.b));
      out += '\t' + t.render_values(w);
    }
    out += '\n';
  }
  for (auto c : ms.length1) {
    out += "0\t0\t" + value(c);
    if (words) out += '\t' + value(c);
    out += '\n';
  }
  return out;
}

}  // namespace textidx
