#include "textidx/suffix_base.hpp"

#include <algorithm>
#include <bit>

namespace textidx {

namespace {

std::vector<std::int32_t> sa_naive(std::span<const std::int32_t> s) {
  std::vector<std::int32_t> sa(s.size());
  for (std::size_t i = 0; i < sa.size(); ++i) sa[i] = static_cast<std::int32_t>(i);
  std::sort(sa.begin(), sa.end(), [&](std::int32_t a, std::int32_t b) {
    return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
  });
  return sa;
}

/// Argmin over a fixed array: a sparse table over blocks of kBlock entries plus
/// scans inside the two partial blocks. Space is about n entries.
class RangeMinimum {
 public:
  static constexpr std::size_t kBlock = 32;

  explicit RangeMinimum(std::span<const std::int32_t> values) : values_(values) {
    const std::size_t blocks = (values.size() + kBlock - 1) / kBlock;
    std::vector<std::int32_t> level(blocks);
    for (std::size_t k = 0; k < blocks; ++k)
      level[k] = scan(k * kBlock, std::min(values.size(), (k + 1) * kBlock) - 1);
    width_ = blocks;
    table_ = level;
    for (std::size_t w = 1; 2 * w <= blocks; w *= 2) {
      for (std::size_t i = 0; i + 2 * w <= blocks; ++i) level[i] = better(level[i], level[i + w]);
      table_.insert(table_.end(), level.begin(), level.end());
    }
  }

  /// Index of a minimum in [l, r], inclusive.
  std::int32_t query(std::size_t l, std::size_t r) const {
    const std::size_t bl = l / kBlock;
    const std::size_t br = r / kBlock;
    if (bl == br) return scan(l, r);
    std::int32_t best = better(scan(l, (bl + 1) * kBlock - 1), scan(br * kBlock, r));
    if (bl + 1 < br) {
      const std::size_t lo = bl + 1;
      const std::size_t hi = br - 1;
      const std::size_t level = static_cast<std::size_t>(std::bit_width(hi - lo + 1)) - 1;
      const std::int32_t* row = table_.data() + level * width_;
      best = better(best, better(row[lo], row[hi + 1 - (std::size_t{1} << level)]));
    }
    return best;
  }

 private:
  std::int32_t better(std::int32_t a, std::int32_t b) const {
    return values_[static_cast<std::size_t>(b)] < values_[static_cast<std::size_t>(a)] ? b : a;
  }
  std::int32_t scan(std::size_t l, std::size_t r) const {
    std::size_t best = l;
    for (std::size_t i = l + 1; i <= r; ++i)
      if (values_[i] < values_[best]) best = i;
    return static_cast<std::int32_t>(best);
  }

  std::span<const std::int32_t> values_;
  std::size_t width_ = 0;
  std::vector<std::int32_t> table_;  // row k: argmin of blocks [i, i + 2^k)
};

}  // namespace

std::vector<std::int32_t> sa_is(std::span<const std::int32_t> s, std::int32_t upper) {
  const std::int32_t n = static_cast<std::int32_t>(s.size());
  if (n == 0) return {};
  if (n == 1) return {0};
  if (n < 10) return sa_naive(s);

  auto at = [&](std::int32_t i) { return s[static_cast<std::size_t>(i)]; };
  std::vector<std::int32_t> sa(static_cast<std::size_t>(n));
  std::vector<bool> stype(static_cast<std::size_t>(n));
  for (std::int32_t i = n - 2; i >= 0; --i)
    stype[i] = at(i) == at(i + 1) ? stype[i + 1] : at(i) < at(i + 1);

  // bucket heads: sum_l[c] = start of bucket c, sum_s[c] = start of its S-part
  std::vector<std::int32_t> sum_l(static_cast<std::size_t>(upper) + 1), sum_s(sum_l.size());
  for (std::int32_t i = 0; i < n; ++i) {
    if (!stype[i])
      ++sum_s[at(i)];
    else
      ++sum_l[at(i) + 1];
  }
  for (std::int32_t c = 0; c <= upper; ++c) {
    sum_s[c] += sum_l[c];
    if (c < upper) sum_l[c + 1] += sum_s[c];
  }

  auto induce = [&](const std::vector<std::int32_t>& lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::vector<std::int32_t> buf(sum_s);
    for (std::int32_t d : lms)
      if (d != n) sa[buf[at(d)]++] = d;
    buf = sum_l;
    sa[buf[at(n - 1)]++] = n - 1;
    for (std::int32_t i = 0; i < n; ++i) {
      std::int32_t v = sa[i];
      if (v >= 1 && !stype[v - 1]) sa[buf[at(v - 1)]++] = v - 1;
    }
    buf = sum_l;
    for (std::int32_t i = n - 1; i >= 0; --i) {
      std::int32_t v = sa[i];
      if (v >= 1 && stype[v - 1]) sa[--buf[at(v - 1) + 1]] = v - 1;
    }
  };

  std::vector<std::int32_t> lms_map(static_cast<std::size_t>(n) + 1, -1);
  std::vector<std::int32_t> lms;
  for (std::int32_t i = 1; i < n; ++i) {
    if (!stype[i - 1] && stype[i]) {
      lms_map[i] = static_cast<std::int32_t>(lms.size());
      lms.push_back(i);
    }
  }
  const std::int32_t m = static_cast<std::int32_t>(lms.size());

  induce(lms);

  if (m) {
    std::vector<std::int32_t> sorted_lms;
    sorted_lms.reserve(static_cast<std::size_t>(m));
    for (std::int32_t v : sa)
      if (lms_map[v] != -1) sorted_lms.push_back(v);

    std::vector<std::int32_t> reduced(static_cast<std::size_t>(m));
    std::int32_t reduced_upper = 0;
    reduced[lms_map[sorted_lms[0]]] = 0;
    for (std::int32_t k = 1; k < m; ++k) {
      std::int32_t l = sorted_lms[k - 1], r = sorted_lms[k];
      std::int32_t end_l = lms_map[l] + 1 < m ? lms[lms_map[l] + 1] : n;
      std::int32_t end_r = lms_map[r] + 1 < m ? lms[lms_map[r] + 1] : n;
      bool same = true;
      if (end_l - l != end_r - r) {
        same = false;
      } else {
        while (l < end_l && at(l) == at(r)) {
          ++l;
          ++r;
        }
        if (l == n || at(l) != at(r)) same = false;
      }
      if (!same) ++reduced_upper;
      reduced[lms_map[sorted_lms[k]]] = reduced_upper;
    }

    auto reduced_sa = sa_is(reduced, reduced_upper);
    for (std::int32_t k = 0; k < m; ++k) sorted_lms[k] = lms[reduced_sa[k]];
    induce(sorted_lms);
  }
  return sa;
}

SuffixArray build_sa(SymbolView text) {
  SuffixArray out;
  out.sa = sa_is(text.symbols, std::max<Symbol>(text.sigma - 1, 0));
  out.rank.resize(out.sa.size());
  for (std::size_t k = 0; k < out.sa.size(); ++k)
    out.rank[static_cast<std::size_t>(out.sa[k])] = static_cast<std::int32_t>(k);
  return out;
}

LcpArray build_lcp(SymbolView text, const SuffixArray& sa) {
  const std::size_t n = text.size();
  LcpArray out;
  out.lcp.assign(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = static_cast<std::size_t>(sa.rank[i]);
    if (r == 0) {
      h = 0;
      continue;
    }
    std::size_t j = static_cast<std::size_t>(sa.sa[r - 1]);
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    out.lcp[r] = static_cast<std::int32_t>(h);
    if (h) --h;
  }
  return out;
}

NodeId SuffixTree::child(NodeId v, Symbol c) const noexcept {
  auto kids = children_of(v);
  auto it = std::lower_bound(kids.begin(), kids.end(), c,
                             [&](NodeId w, Symbol sym) { return first_symbol(w) < sym; });
  return it != kids.end() && first_symbol(*it) == c ? *it : kNoNode;
}

SuffixTree st_from_sa_lcp(SymbolView text, const SuffixArray& sa, const LcpArray& lcp) {
  const std::int32_t n = static_cast<std::int32_t>(text.size());
  SuffixTree st;
  st.text = text;
  st.nodes.reserve(2 * static_cast<std::size_t>(n));
  st.leaf_of.assign(static_cast<std::size_t>(n), kNoNode);
  st.lca_at.assign(static_cast<std::size_t>(n), kNoNode);

  // (child, parent) pairs in attach order; siblings are attached lexicographically
  std::vector<NodeId> attached;
  attached.reserve(2 * static_cast<std::size_t>(n));
  auto node = [&](NodeId v) -> StNode& { return st.nodes[static_cast<std::size_t>(v)]; };
  auto attach = [&](NodeId child, NodeId parent) {
    node(child).parent = parent;
    attached.push_back(child);
  };

  StNode root;
  root.start = n > 0 ? sa.sa[0] : 0;
  root.sa_lo = 0;
  root.sa_hi = n - 1;
  st.nodes.push_back(root);

  std::vector<NodeId> stack{0};
  for (std::int32_t k = 0; k < n; ++k) {
    const std::int32_t l = k == 0 ? 0 : lcp.lcp[static_cast<std::size_t>(k)];
    NodeId last = kNoNode;
    while (node(stack.back()).depth > l) {
      last = stack.back();
      stack.pop_back();
      node(last).sa_hi = k - 1;
      if (node(stack.back()).depth >= l) attach(last, stack.back());
    }
    if (node(stack.back()).depth < l) {
      check_structure(last != kNoNode, "suffix tree: split without a popped node");
      StNode w;
      w.depth = l;
      w.start = node(last).start;
      w.sa_lo = node(last).sa_lo;
      NodeId wid = static_cast<NodeId>(st.nodes.size());
      st.nodes.push_back(w);
      attach(last, wid);
      stack.push_back(wid);
    }
    if (k > 0) st.lca_at[static_cast<std::size_t>(k)] = stack.back();

    const std::int32_t pos = sa.sa[static_cast<std::size_t>(k)];
    StNode leaf;
    leaf.depth = n - pos;
    leaf.start = pos;
    leaf.suffix = pos;
    leaf.sa_lo = leaf.sa_hi = k;
    NodeId lid = static_cast<NodeId>(st.nodes.size());
    st.nodes.push_back(leaf);
    st.leaf_of[static_cast<std::size_t>(pos)] = lid;
    stack.push_back(lid);
  }
  while (stack.size() > 1) {
    NodeId v = stack.back();
    stack.pop_back();
    node(v).sa_hi = n - 1;
    attach(v, stack.back());
  }

  st.child_offset.assign(st.nodes.size() + 1, 0);
  for (NodeId c : attached) ++st.child_offset[static_cast<std::size_t>(node(c).parent) + 1];
  for (std::size_t v = 0; v < st.nodes.size(); ++v) st.child_offset[v + 1] += st.child_offset[v];
  st.children.resize(attached.size());
  std::vector<std::int32_t> fill(st.child_offset.begin(), st.child_offset.end() - 1);
  for (NodeId c : attached)
    st.children[static_cast<std::size_t>(fill[static_cast<std::size_t>(node(c).parent)]++)] = c;

  for (auto& v : st.nodes) v.leaf_count = v.sa_hi - v.sa_lo + 1;
  return st;
}

void fill_suffix_links(SuffixTree& st, const SuffixArray& sa, const LcpArray& lcp) {
  const std::size_t n = st.text.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    st.nodes[static_cast<std::size_t>(st.leaf_of[i])].slink = st.leaf_of[i + 1];
  if (n > 0) st.nodes[static_cast<std::size_t>(st.leaf_of[n - 1])].slink = SuffixTree::root();
  if (n < 2) return;

  RangeMinimum rmq(lcp.lcp);
  for (std::size_t v = 1; v < st.nodes.size(); ++v) {
    StNode& x = st.nodes[v];
    if (x.suffix >= 0) continue;
    const std::size_t i = static_cast<std::size_t>(sa.sa[static_cast<std::size_t>(x.sa_lo)]);
    const std::size_t j = static_cast<std::size_t>(sa.sa[static_cast<std::size_t>(x.sa_hi)]);
    check_structure(i + 1 < n && j + 1 < n, "suffix link: internal node contains the last suffix");
    std::size_t r1 = static_cast<std::size_t>(sa.rank[i + 1]);
    std::size_t r2 = static_cast<std::size_t>(sa.rank[j + 1]);
    if (r1 > r2) std::swap(r1, r2);
    NodeId target = st.lca_at[static_cast<std::size_t>(rmq.query(r1 + 1, r2))];
    check_structure(st[target].depth == x.depth - 1, "suffix link: target depth mismatch");
    x.slink = target;
  }
}

SuffixTree build_suffix_tree(SymbolView text) {
  SuffixArray sa = build_sa(text);
  LcpArray lcp = build_lcp(text, sa);
  SuffixTree st = st_from_sa_lcp(text, sa, lcp);
  fill_suffix_links(st, sa, lcp);
  return st;
}

SuffixLinkTreeView slt_view(const SuffixTree& st) {
  SuffixLinkTreeView view;
  view.offset.assign(st.size() + 1, 0);
  for (const auto& v : st.nodes)
    if (v.slink != kNoNode) ++view.offset[static_cast<std::size_t>(v.slink) + 1];
  for (std::size_t v = 0; v < st.size(); ++v) view.offset[v + 1] += view.offset[v];
  view.preds.resize(static_cast<std::size_t>(view.offset.back()));
  std::vector<std::int32_t> fill(view.offset.begin(), view.offset.end() - 1);
  for (std::size_t v = 0; v < st.size(); ++v) {
    NodeId s = st.nodes[v].slink;
    if (s != kNoNode) view.preds[static_cast<std::size_t>(fill[static_cast<std::size_t>(s)]++)] = static_cast<NodeId>(v);
  }
  return view;
}

}  // namespace textidx
