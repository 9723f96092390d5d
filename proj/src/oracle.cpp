#include "textidx/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>

namespace textidx {

namespace {

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) fail(ErrorCode::CapExceeded, std::string(what) + ": input of length " + std::to_string(n) +
                                                " exceeds the cap " + std::to_string(cap));
}

/// Depth-first walk over the suffix trie: f(length, ends, children) for every
/// distinct substring, the empty one first. `ends` are the 1-based end positions
/// (ascending); `children` pairs each next symbol with the ends of the extension.
template <class F>
void walk_substrings(SymbolView text, F&& f) {
  const std::int32_t n = static_cast<std::int32_t>(text.size());
  struct Item {
    std::int32_t length;
    std::vector<std::int32_t> ends;
  };
  std::vector<Item> stack;
  stack.push_back({0, {}});
  for (std::int32_t e = 0; e <= n; ++e) stack.back().ends.push_back(e);
  std::map<Symbol, std::vector<std::int32_t>> next;
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    next.clear();
    for (std::int32_t e : item.ends)
      if (e < n) next[text[static_cast<std::size_t>(e)]].push_back(e + 1);
    f(item.length, item.ends, next);
    for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back({item.length + 1, std::move(it->second)});
  }
}

std::int64_t class_key(std::int32_t first, std::size_t count) {
  return (static_cast<std::int64_t>(first) << 32) | static_cast<std::int64_t>(count);
}

}  // namespace

std::vector<Symbol> NaiveClasses::str(std::int32_t index) const {
  const auto& s = substrings[static_cast<std::size_t>(index)];
  auto b = text.symbols.begin() + s.start;
  return {b, b + s.length};
}

std::vector<std::vector<Symbol>> NaiveClasses::r_set() const {
  std::vector<std::vector<Symbol>> out;
  for (auto r : rrep) out.push_back(str(r));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Symbol>> NaiveClasses::l_set() const {
  std::vector<std::vector<Symbol>> out;
  for (auto l : lrep) out.push_back(str(l));
  std::sort(out.begin(), out.end());
  return out;
}

NaiveClasses naive_classes(SymbolView text, std::size_t cap) {
  check_cap(text.size(), cap, "naive_classes");
  NaiveClasses nc;
  nc.text = text;
  std::unordered_map<std::int64_t, std::int32_t> r_of, l_of;
  walk_substrings(text, [&](std::int32_t len, const std::vector<std::int32_t>& ends, const auto&) {
    const auto index = static_cast<std::int32_t>(nc.substrings.size());
    auto [r, r_new] = r_of.try_emplace(class_key(ends[0], ends.size()), static_cast<std::int32_t>(nc.end_pos.size()));
    if (r_new) {
      nc.end_pos.push_back(ends);
      nc.rrep.push_back(index);
    }
    auto [l, l_new] = l_of.try_emplace(class_key(ends[0] - len, ends.size()), static_cast<std::int32_t>(nc.beg_pos.size()));
    if (l_new) {
      std::vector<std::int32_t> begs;
      for (auto e : ends) begs.push_back(e - len + 1);
      nc.beg_pos.push_back(std::move(begs));
      nc.lrep.push_back(index);
    }
    nc.substrings.push_back({ends[0] - len, len, r->second, l->second});
    auto& rr = nc.rrep[static_cast<std::size_t>(r->second)];
    if (nc.substrings[static_cast<std::size_t>(rr)].length < len) rr = index;
    auto& ll = nc.lrep[static_cast<std::size_t>(l->second)];
    if (nc.substrings[static_cast<std::size_t>(ll)].length < len) ll = index;
  });
  return nc;
}

Dawg oracle_minimal_dawg(SymbolView text, std::size_t cap) {
  check_cap(text.size(), cap, "oracle_minimal_dawg");
  struct Cls {
    std::int32_t len = 0;
    std::int32_t shortlen = 0;
    std::int32_t end = 0;
    bool seen = false;
    std::vector<std::pair<Symbol, std::int32_t>> edges;
  };
  std::vector<Cls> cls;
  std::unordered_map<std::int64_t, std::int32_t> id_of;
  auto class_of = [&](const std::vector<std::int32_t>& ends) {
    auto [it, fresh] = id_of.try_emplace(class_key(ends[0], ends.size()), static_cast<std::int32_t>(cls.size()));
    if (fresh) cls.push_back({});
    return it->second;
  };

  walk_substrings(text, [&](std::int32_t len, const std::vector<std::int32_t>& ends, const auto& next) {
    const auto c = static_cast<std::size_t>(class_of(ends));
    if (!cls[c].seen) {
      cls[c].seen = true;
      cls[c].len = cls[c].shortlen = len;
      cls[c].end = ends[0];
      for (const auto& [sym, child] : next) {
        auto t = class_of(child);
        cls[c].edges.emplace_back(sym, t);
      }
    }
    cls[c].len = std::max(cls[c].len, len);
    cls[c].shortlen = std::min(cls[c].shortlen, len);
  });

  const std::int32_t n = static_cast<std::int32_t>(text.size());
  const std::int32_t source = id_of.at(class_key(0, static_cast<std::size_t>(n) + 1));
  const std::int32_t sink = id_of.at(class_key(n, 1));
  auto step = [&](std::int32_t c, Symbol s) {
    for (auto [sym, t] : cls[static_cast<std::size_t>(c)].edges)
      if (sym == s) return t;
    fail(ErrorCode::StructureCorrupt, "oracle: missing transition");
  };
  std::vector<DawgNode> nodes(cls.size());
  std::vector<EdgeTriple> edges;
  for (std::size_t c = 0; c < cls.size(); ++c) {
    nodes[c].len = cls[c].len;
    nodes[c].end_pos = cls[c].end;
    for (auto [sym, t] : cls[c].edges) edges.push_back({static_cast<NodeId>(c), sym, t});
    if (static_cast<std::int32_t>(c) == source) continue;
    const std::int32_t begin = cls[c].end - cls[c].shortlen;
    std::int32_t at = source;
    for (std::int32_t k = begin + 1; k < cls[c].end; ++k) at = step(at, text[static_cast<std::size_t>(k)]);
    nodes[c].slink = at;
    nodes[c].slink_label = text[static_cast<std::size_t>(begin)];
  }
  return assemble_dawg(std::move(nodes), edges, source, sink);
}

std::uint64_t naive_distinct_substrings(SymbolView text, std::size_t cap) {
  check_cap(text.size(), cap, "naive_distinct_substrings");
  std::uint64_t count = 0;
  walk_substrings(text, [&](std::int32_t, const auto&, const auto&) { ++count; });
  return count - 1;
}

std::vector<std::vector<std::int64_t>> naive_maw(const Text& t, std::size_t cap) {
  check_cap(t.core_size(), cap, "naive_maw");
  const auto core = t.symbols().first(t.core_size());
  struct TrieNode {
    std::map<Symbol, std::int32_t> next;
    std::int32_t start = 0;
    std::int32_t depth = 0;
    std::int32_t slink = 0;
  };
  std::vector<TrieNode> trie(1);
  for (std::size_t i = 0; i < core.size(); ++i) {
    std::int32_t v = 0;
    for (std::size_t k = i; k < core.size(); ++k) {
      auto it = trie[static_cast<std::size_t>(v)].next.find(core[k]);
      if (it == trie[static_cast<std::size_t>(v)].next.end()) {
        auto id = static_cast<std::int32_t>(trie.size());
        trie[static_cast<std::size_t>(v)].next.emplace(core[k], id);
        trie.push_back({{}, static_cast<std::int32_t>(i), static_cast<std::int32_t>(k - i + 1), 0});
        v = id;
      } else {
        v = it->second;
      }
    }
  }
  // suffix links by breadth-first search
  std::deque<std::int32_t> queue{0};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto [c, child] : trie[static_cast<std::size_t>(v)].next) {
      trie[static_cast<std::size_t>(child)].slink =
          v == 0 ? 0 : trie[static_cast<std::size_t>(trie[static_cast<std::size_t>(v)].slink)].next.at(c);
      queue.push_back(child);
    }
  }
  std::vector<Symbol> alphabet;
  for (auto [c, child] : trie[0].next) alphabet.push_back(c);

  std::vector<std::vector<std::int64_t>> words;
  for (std::size_t v = 1; v < trie.size(); ++v) {
    const auto& node = trie[v];
    const auto& shorter = trie[static_cast<std::size_t>(node.slink)];
    for (Symbol b : alphabet) {
      if (node.next.count(b) || !shorter.next.count(b)) continue;
      std::vector<std::int64_t> w;
      for (std::int32_t k = 0; k < node.depth; ++k) w.push_back(t.original(core[static_cast<std::size_t>(node.start + k)]));
      w.push_back(t.original(b));
      words.push_back(std::move(w));
    }
  }
  for (auto c : t.absent_symbols()) words.push_back({c});
  std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return words;
}

bool is_minimal_absent(const Text& t, std::span<const std::int64_t> w) {
  std::vector<std::int64_t> core;
  for (std::size_t k = 0; k < t.core_size(); ++k) core.push_back(t.original(t.symbols()[k]));
  auto occurs = [&](std::span<const std::int64_t> s) {
    return std::search(core.begin(), core.end(), s.begin(), s.end()) != core.end();
  };
  if (w.empty() || occurs(w)) return false;
  if (w.size() == 1) return true;
  return occurs(w.first(w.size() - 1)) && occurs(w.subspan(1));
}

std::vector<std::vector<Symbol>> naive_maximal_repeats(SymbolView text, std::size_t cap) {
  check_cap(text.size(), cap, "naive_maximal_repeats");
  const std::int32_t n = static_cast<std::int32_t>(text.size());
  std::vector<std::vector<Symbol>> out;
  walk_substrings(text, [&](std::int32_t len, const std::vector<std::int32_t>& ends, const auto&) {
    if (len == 0 || ends.size() < 2) return;
    // -1 stands for "no symbol": a boundary occurrence can never be extended
    auto same = [&](auto at) {
      const Symbol first = at(ends[0]);
      if (first < 0) return false;
      for (auto e : ends)
        if (at(e) != first) return false;
      return true;
    };
    auto before = [&](std::int32_t e) { return e - len > 0 ? text[static_cast<std::size_t>(e - len - 1)] : -1; };
    auto after = [&](std::int32_t e) { return e < n ? text[static_cast<std::size_t>(e)] : -1; };
    if (same(before) || same(after)) return;
    auto b = text.symbols.begin() + (ends[0] - len);
    out.emplace_back(b, b + len);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> canonical_form(const Dawg& d) {
  std::vector<std::int32_t> num(d.node_count(), -1);
  std::vector<NodeId> order{d.source};
  num[static_cast<std::size_t>(d.source)] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (const auto& e : d.out(order[k]))
      if (num[static_cast<std::size_t>(e.target)] < 0) {
        num[static_cast<std::size_t>(e.target)] = static_cast<std::int32_t>(order.size());
        order.push_back(e.target);
      }
  std::vector<std::int64_t> form{static_cast<std::int64_t>(d.node_count()), static_cast<std::int64_t>(order.size()),
                                 num[static_cast<std::size_t>(d.sink)]};
  for (NodeId v : order) {
    const auto& x = d[v];
    form.push_back(x.len);
    form.push_back(x.slink == kNoNode ? -1 : num[static_cast<std::size_t>(x.slink)]);
    form.push_back(x.slink_label);
    form.push_back(static_cast<std::int64_t>(d.out(v).size()));
    for (const auto& e : d.out(v)) {
      form.push_back(e.symbol);
      form.push_back(num[static_cast<std::size_t>(e.target)]);
    }
  }
  return form;
}

bool canonical_isomorphic(const Dawg& a, const Dawg& b) { return canonical_form(a) == canonical_form(b); }

std::vector<std::int64_t> canonical_form(const Cdawg& c, std::span<const Symbol> text) {
  std::vector<std::int32_t> num(c.node_count(), -1);
  std::vector<NodeId> order{c.source};
  num[static_cast<std::size_t>(c.source)] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (const auto& e : c.out(order[k]))
      if (num[static_cast<std::size_t>(e.target)] < 0) {
        num[static_cast<std::size_t>(e.target)] = static_cast<std::int32_t>(order.size());
        order.push_back(e.target);
      }
  std::vector<std::int64_t> form{static_cast<std::int64_t>(c.node_count()), static_cast<std::int64_t>(order.size()),
                                 num[static_cast<std::size_t>(c.sink)]};
  for (NodeId v : order) {
    form.push_back(c[v].len);
    form.push_back(static_cast<std::int64_t>(c.out(v).size()));
    for (const auto& e : c.out(v)) {
      form.push_back(e.length);
      for (std::int32_t k = 0; k < e.length; ++k) form.push_back(text[static_cast<std::size_t>(e.start + k)]);
      form.push_back(num[static_cast<std::size_t>(e.target)]);
    }
  }
  return form;
}

MawSet reference_mf_trie(const Dawg& d, const Text& t, std::size_t cap) {
  const Symbol sigma = t.dense_sigma();
  check_cap(d.node_count() * static_cast<std::size_t>(sigma), cap, "reference_mf_trie");
  MawSet ms;
  ms.text = &t;
  for (std::size_t v = 0; v < d.node_count(); ++v) {
    const NodeId u = static_cast<NodeId>(v);
    if (u == d.source || u == d.sink) continue;
    const NodeId link = d[u].slink;
    for (Symbol b = 1; b < sigma; ++b)
      if (d.next(u, b) == kNoNode && d.next(link, b) != kNoNode)
        ms.triples.push_back({d[u].end_pos - d[link].len, d[u].end_pos, b});
  }
  ms.length1 = t.absent_symbols();
  return ms;
}

std::vector<std::vector<Symbol>> spelled(SymbolView text,
                                         std::span<const std::pair<std::int32_t, std::int32_t>> nodes) {
  std::vector<std::vector<Symbol>> out;
  out.reserve(nodes.size());
  for (auto [start, depth] : nodes) {
    auto b = text.symbols.begin() + start;
    out.emplace_back(b, b + depth);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace textidx
