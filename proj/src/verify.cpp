#include "textidx/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "textidx/affix.hpp"
#include "textidx/compact.hpp"
#include "textidx/fwd_dawg.hpp"
#include "textidx/maw.hpp"
#include "textidx/oracle.hpp"
#include "textidx/rev_dawg.hpp"

namespace textidx {

namespace {

using Str = std::vector<Symbol>;
using Failure = std::optional<std::string>;

Str node_string(SymbolView text, std::int32_t start, std::int32_t depth) {
  auto b = text.symbols.begin() + start;
  return {b, b + depth};
}

bool occurs(SymbolView text, const Str& w) {
  return std::search(text.symbols.begin(), text.symbols.end(), w.begin(), w.end()) != text.symbols.end();
}

std::int32_t occurrences(SymbolView text, const Str& w) {
  std::int32_t count = 0;
  for (auto it = text.symbols.begin();; ++it) {
    it = std::search(it, text.symbols.end(), w.begin(), w.end());
    if (it == text.symbols.end()) return count;
    ++count;
  }
}

Str reversed(SymbolView text) { return {text.symbols.rbegin(), text.symbols.rend()}; }

Failure check_st(const Text& t) {
  const SymbolView v = t.view();
  SuffixTree st = build_suffix_tree(v);
  std::vector<std::pair<std::int32_t, std::int32_t>> locs;
  for (const auto& x : st.nodes) locs.emplace_back(x.start, x.depth);
  if (spelled(v, locs) != naive_classes(v).l_set()) return "node strings differ from the longest begin-position class members";
  for (std::size_t k = 1; k < st.size(); ++k) {
    const NodeId x = static_cast<NodeId>(k);
    Str s = node_string(v, st[x].start, st[x].depth);
    const NodeId link = st[x].slink;
    if (link == kNoNode || node_string(v, st[link].start, st[link].depth) != Str(s.begin() + 1, s.end()))
      return "wrong suffix link at node " + std::to_string(k);
    if (st[x].leaf_count != occurrences(v, s)) return "wrong leaf count at node " + std::to_string(k);
    auto ch = st.children_of(x);
    for (std::size_t i = 1; i < ch.size(); ++i)
      if (st.first_symbol(ch[i - 1]) >= st.first_symbol(ch[i])) return "children not sorted";
  }
  if (st.size() > 2 * v.size() - 1) return "more than 2n - 1 nodes";
  return std::nullopt;
}

Failure check_rdawg(const Text& t) {
  const SymbolView v = t.view();
  SuffixTree st = build_suffix_tree(v);
  WeinerLinks wl = implicit_weiner(st, explicit_weiner(st));
  Dawg rd = assemble_reversed_dawg(st, wl);
  Str rev = reversed(v);
  if (!canonical_isomorphic(rd, oracle_minimal_dawg({rev, v.sigma}))) return "reversed DAWG differs from the oracle";
  for (std::size_t k = 0; k < st.size(); ++k) {
    const NodeId x = static_cast<NodeId>(k);
    Str s = node_string(v, st[x].start, st[x].depth);
    for (Symbol a = 0; a < v.sigma; ++a) {
      Str as{a};
      as.insert(as.end(), s.begin(), s.end());
      if ((wl.find(x, a) != kNoNode) != occurs(v, as))
        return "Weiner link (" + std::to_string(k) + ", " + std::to_string(a) + ") wrong";
    }
  }
  if (v.size() > 2 && rd.edge_count() > 3 * v.size() - 4) return "more than 3n - 4 Weiner links";
  return std::nullopt;
}

Failure check_dawg(const Text& t, const DawgBuilder& build) {
  const SymbolView v = t.view();
  Dawg d = build(v);
  if (!is_edge_sorted(d)) return "edges not sorted";
  if (!canonical_isomorphic(d, oracle_minimal_dawg(v))) return "DAWG differs from the oracle";
  std::uint64_t distinct = 0;
  for (std::size_t k = 0; k < d.node_count(); ++k)
    if (static_cast<NodeId>(k) != d.source) distinct += static_cast<std::uint64_t>(d.nodes[k].len - d[d.nodes[k].slink].len);
  if (distinct != naive_distinct_substrings(v)) return "distinct-substring count differs";
  return std::nullopt;
}

Failure check_maw(const Text& base) {
  std::vector<std::int64_t> raw;
  for (std::size_t k = 0; k < base.core_size(); ++k) raw.push_back(base.original(base.symbols()[k]));
  // one extra declared symbol so that length-1 words are exercised
  const Text t = ingest(raw, base.distinct_symbols() + 1, base.bytes());
  Dawg d = build_dawg(t.view());
  MawStats stats;
  MawSet ms = compute_maws(d, t, &stats);
  auto words = decode_maws(ms, true);
  if (words.size() != ms.size()) return "duplicate words";
  if (words != naive_maw(t)) return "word set differs from the brute-force set";
  for (const auto& w : words)
    if (!is_minimal_absent(t, w)) return "emitted word is not minimal absent";
  if (decode_maws(reference_mf_trie(d, t), true) != words) return "differs from the per-symbol scan";
  if (stats.examined > 2 * (d.edge_count() + ms.triples.size() + d.node_count()))
    return "examined " + std::to_string(stats.examined) + " adjacency entries";
  return std::nullopt;
}

Failure check_affix(const Text& t) {
  const SymbolView v = t.view();
  SuffixTree st = build_suffix_tree(v);
  Ast ast = build_ast(st, black_st_nodes(st, slt_view(st)));
  AffixTree at = build_affix_tree(ast);
  NaiveClasses nc = naive_classes(v);

  std::vector<std::pair<std::int32_t, std::int32_t>> locs;
  for (const auto& x : ast.nodes) locs.emplace_back(x.start, x.depth);
  auto lr = nc.l_set();
  auto r = nc.r_set();
  lr.insert(lr.end(), r.begin(), r.end());
  std::sort(lr.begin(), lr.end());
  lr.erase(std::unique(lr.begin(), lr.end()), lr.end());
  if (spelled(v, locs) != lr) return "node strings differ from L u R";
  for (std::size_t k = 1; k < ast.size(); ++k)
    if (!ast.nodes[k].black && !ast.is_original(static_cast<NodeId>(k))) return "white inserted node";

  std::set<Str> nodes(lr.begin(), lr.end());
  for (std::size_t k = 0; k < nc.substrings.size(); ++k) {
    Str w = nc.str(static_cast<std::int32_t>(k));
    auto f = forward_locus(at, w);
    auto b = backward_locus(at, w);
    if (!f || !b) return "substring not reachable in both directions";
    const NodeId fn = node_at(at, *f);
    const NodeId bn = node_at(at, *b);
    const bool is_node = nodes.count(w) > 0;
    if ((fn != kNoNode) != is_node || (bn != kNoNode) != is_node || fn != bn) return "loci disagree";
    for (Symbol a = 0; a < v.sigma; ++a) {
      Str aw{a};
      aw.insert(aw.end(), w.begin(), w.end());
      auto ext = extend_left(at, *b, a);
      auto direct = backward_locus(at, aw);
      if (ext.has_value() != occurs(v, aw) || ext != direct) return "left extension disagrees";
      if (ext) {
        auto fwd = forward_locus(at, aw);
        if (!fwd || node_at(at, *fwd) != node_at(at, *ext)) return "left extension lands on another node";
      }
    }
  }
  return std::nullopt;
}

Failure check_cdawg(const Text& t) {
  const SymbolView v = t.view();
  Dawg d = build_dawg(v);
  Cdawg c = cdawg_from_dawg(d);
  std::vector<Str> internal;
  for (std::size_t k = 0; k < c.node_count(); ++k) {
    const NodeId x = static_cast<NodeId>(k);
    if (x == c.source || x == c.sink) continue;
    internal.push_back(node_string(v, c[x].end_pos - c[x].len, c[x].len));
  }
  std::sort(internal.begin(), internal.end());
  if (internal != naive_maximal_repeats(v)) return "internal nodes differ from the maximal repeats";

  SuffixTree st = build_suffix_tree(v);
  Dawg rd = build_reversed_dawg(st);
  SymmetricCdawg s = build_symmetric_cdawg(st, rd);
  if (canonical_form(s.forward, v.symbols) != canonical_form(c, v.symbols))
    return "forward projection differs from the compacted DAWG";
  Str rev = reversed(v);
  if (canonical_form(s.backward, rev) != canonical_form(cdawg_from_dawg(oracle_minimal_dawg({rev, v.sigma})), rev))
    return "backward projection differs from the compacted oracle DAWG of the reversal";
  return std::nullopt;
}

Failure check_lstrie(const Text& t) {
  const SymbolView v = t.view();
  SuffixTree st = build_suffix_tree(v);
  WeinerLinks wl = implicit_weiner(st, explicit_weiner(st));
  Ast ast = build_ast(st, black_st_nodes(st, slt_view(st)));
  AffixTree at = build_affix_tree(ast);
  ModifiedWeinerLinks mwl = extract_mwl(at, wl);
  LsTrie ls = build_lstrie(st, mwl);

  std::set<std::pair<NodeId, std::int32_t>> targets, type2;
  for (const auto& l : mwl.links)
    if (!l.explicit_link) targets.emplace(l.target, l.depth);
  for (std::size_t k = ls.st_count; k < ls.size(); ++k) type2.emplace(ls.nodes[k].st_node, ls.nodes[k].depth);
  if (targets != type2) return "type-2 nodes differ from the implicit link targets";

  // independent count: ax with x a suffix-tree node, ax a substring but not a node
  std::set<Str> l_nodes;
  for (const auto& x : st.nodes) l_nodes.insert(node_string(v, x.start, x.depth));
  std::size_t expected = 0;
  for (const auto& x : l_nodes)
    for (Symbol a = 0; a < v.sigma; ++a) {
      Str ax{a};
      ax.insert(ax.end(), x.begin(), x.end());
      if (!l_nodes.count(ax) && occurs(v, ax)) ++expected;
    }
  if (expected != ls.type2_count()) return "type-2 count differs from the brute-force count";

  for (std::size_t k = 1; k < ls.size(); ++k) {
    const NodeId x = static_cast<NodeId>(k);
    const auto& node = ls[x];
    const auto parent = ls[node.parent];
    bool found = false;
    for (const auto& e : ls.out(node.parent)) {
      if (e.target != x) continue;
      found = true;
      if (e.symbol != v[static_cast<std::size_t>(e.witness)]) return "edge symbol differs from its witness";
      for (std::int32_t i = 0; i < ls.label_length(x); ++i)
        if (v[static_cast<std::size_t>(e.witness + i)] != v[static_cast<std::size_t>(node.start + parent.depth + i)])
          return "witness does not spell the edge label";
    }
    if (!found) return "node without an incoming edge";
  }
  if (ls.size() > 2 * (2 * v.size() - 1)) return "more than 2(2n - 1) nodes";
  return std::nullopt;
}

Failure check_bounds(const Text& t) {
  const std::size_t n = t.size();
  Dawg d = build_dawg(t.view());
  if (n > 2 && (d.node_count() > 2 * n - 1 || d.edge_count() > 3 * n - 4))
    return std::to_string(d.node_count()) + " nodes, " + std::to_string(d.edge_count()) + " edges";
  MawSet ms = compute_maws(d, t);
  if (ms.size() < maw_lower_bound(t) || ms.size() > maw_upper_bound(t))
    return std::to_string(ms.size()) + " minimal absent words";
  return std::nullopt;
}

std::vector<Text> exhaustive(std::size_t sigma, std::size_t max_len) {
  std::vector<Text> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::int64_t> w(len, 0);
    while (true) {
      std::string s;
      for (auto c : w) s.push_back(static_cast<char>('a' + c));
      out.push_back(ingest_bytes(s));
      std::size_t k = 0;
      while (k < len && ++w[k] == static_cast<std::int64_t>(sigma)) w[k++] = 0;
      if (k == len) break;
    }
  }
  return out;
}

}  // namespace

Text random_text(std::size_t n, std::size_t sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, static_cast<std::int64_t>(sigma) - 1);
  std::vector<std::int64_t> raw(n);
  const bool letters = sigma <= 26;
  for (auto& c : raw) c = letters ? 'a' + pick(rng) : 1 + pick(rng);
  return ingest(raw, std::nullopt, letters);
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{"st", "rdawg", "dawg", "maw", "affix", "cdawg", "lstrie", "bounds"};
  return names;
}

std::optional<std::string> check_property(const std::string& name, const Text& t, const DawgBuilder& dawg) {
  try {
    if (name == "st") return check_st(t);
    if (name == "rdawg") return check_rdawg(t);
    if (name == "dawg") return check_dawg(t, dawg ? dawg : DawgBuilder(build_dawg));
    if (name == "maw") return check_maw(t);
    if (name == "affix") return check_affix(t);
    if (name == "cdawg") return check_cdawg(t);
    if (name == "lstrie") return check_lstrie(t);
    if (name == "bounds") return check_bounds(t);
  } catch (const Error& e) {
    return std::string(e.what());
  }
  fail(ErrorCode::BadInput, "unknown property '" + name + "'");
}

std::vector<PropertyResult> run_verify(const VerifyConfig& cfg,
                                       const std::function<void(const PropertyResult&)>& on_result) {
  for (const auto& name : cfg.only)
    if (std::find(property_names().begin(), property_names().end(), name) == property_names().end())
      fail(ErrorCode::BadInput, "unknown property '" + name + "'");
  auto selected = [&](const char* name) { return cfg.only.empty() || std::find(cfg.only.begin(), cfg.only.end(), name) != cfg.only.end(); };
  const std::size_t cap = selected("maw") ? OracleCaps{}.maw : OracleCaps{}.classes - 1;
  if (cfg.max_n > cap)
    fail(ErrorCode::BadInput, "max_n " + std::to_string(cfg.max_n) + " exceeds the brute-force limit " + std::to_string(cap));

  std::vector<Text> corpus = exhaustive(2, cfg.exhaustive_binary);
  for (auto& t : exhaustive(3, cfg.exhaustive_ternary)) corpus.push_back(std::move(t));
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t k = 0; k < cfg.random_cases && cfg.max_n > 0; ++k) {
    const std::size_t n = 1 + rng() % cfg.max_n;
    const std::size_t sigmas[] = {2, 4, 16, n};
    corpus.push_back(random_text(n, sigmas[k % 4], rng()));
  }

  std::vector<PropertyResult> results;
  for (const auto& name : property_names()) {
    if (!cfg.only.empty() && std::find(cfg.only.begin(), cfg.only.end(), name) == cfg.only.end()) continue;
    PropertyResult r;
    r.name = name;
    for (const Text& t : corpus) {
      ++r.cases;
      if (auto bad = check_property(name, t, cfg.dawg_builder)) {
        r.passed = false;
        r.counterexample = t.render(t.symbols().first(t.core_size()));
        r.detail = *bad;
        break;
      }
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace textidx
