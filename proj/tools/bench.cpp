#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "textidx/affix.hpp"
#include "textidx/compact.hpp"
#include "textidx/fwd_dawg.hpp"
#include "textidx/maw.hpp"
#include "textidx/rev_dawg.hpp"

namespace textidx::bench {

const std::vector<std::string>& stages() {
  static const std::vector<std::string> names{"st", "rdawg", "dawg", "affix", "cdawg", "scdawg", "lstrie", "maw"};
  return names;
}

namespace {

template <class F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : (v[k - 1] + v[k]) / 2;
}

}  // namespace

Timing measure(const Text& t, const std::vector<std::string>& selected, int runs) {
  auto wants = [&](const std::string& s) { return std::find(selected.begin(), selected.end(), s) != selected.end(); };
  const bool lstrie = wants("lstrie");
  const bool affix = wants("affix") || lstrie;
  const bool rdawg = wants("rdawg") || wants("scdawg") || lstrie;
  const bool maw = wants("maw");
  const bool cdawg = wants("cdawg");
  const bool dawg = wants("dawg") || cdawg || maw;
  const bool ast_needed = dawg || affix;

  std::map<std::string, std::vector<double>> samples;
  Timing out;
  out.n = t.core_size();
  out.sigma = t.distinct_symbols();
  for (int r = 0; r < runs; ++r) {
    std::optional<SuffixTree> st;
    samples["st"].push_back(timed([&] { st.emplace(build_suffix_tree(t.view())); }));

    std::optional<WeinerLinks> wl;
    std::optional<Dawg> rd;
    if (rdawg)
      samples["rdawg"].push_back(timed([&] {
        wl.emplace(implicit_weiner(*st, explicit_weiner(*st)));
        rd.emplace(assemble_reversed_dawg(*st, *wl));
      }));

    std::optional<Ast> ast;
    std::optional<Dawg> d;
    if (ast_needed) {
      double ms = timed([&] { ast.emplace(build_ast(*st, black_st_nodes(*st, slt_view(*st)))); });
      if (dawg) samples["dawg"].push_back(ms + timed([&] { d.emplace(dawg_from_ast(*ast)); }));
    }

    std::optional<AffixTree> at;
    if (affix) samples["affix"].push_back(timed([&] { at.emplace(build_affix_tree(*ast)); }));
    if (cdawg) samples["cdawg"].push_back(timed([&] { (void)cdawg_from_dawg(*d); }));
    if (wants("scdawg")) samples["scdawg"].push_back(timed([&] { (void)build_symmetric_cdawg(*st, *rd); }));
    if (lstrie) samples["lstrie"].push_back(timed([&] { (void)build_lstrie(*st, extract_mwl(*at, *wl)); }));
    if (maw)
      samples["maw"].push_back(timed([&] {
        std::uint64_t count = t.absent_symbols().size();
        for_each_maw(*d, [&](const MawTriple&) { ++count; });
        out.maw_count = count;
      }));
  }
  for (auto& [name, v] : samples)
    if (wants(name)) out.median_ms[name] = median(v);
  return out;
}

}  // namespace textidx::bench
