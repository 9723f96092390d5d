#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "bench.hpp"
#include "json.hpp"
#include "textidx/affix.hpp"
#include "textidx/compact.hpp"
#include "textidx/export.hpp"
#include "textidx/fwd_dawg.hpp"
#include "textidx/maw.hpp"
#include "textidx/rev_dawg.hpp"
#include "textidx/verify.hpp"

using namespace textidx;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kCorrupt = 3 };

const std::vector<std::string> kStructs{"st", "dawg", "rdawg", "affix", "cdawg", "scdawg", "lstrie", "maw"};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(s)) {
    double v = std::stod(item);  // accepts 1e6
    if (v < 1) fail(ErrorCode::BadInput, "size must be positive: " + item);
    out.push_back(static_cast<std::size_t>(std::llround(v)));
  }
  return out;
}

/// PATH for a single structure, PATH with ".NAME" before the extension otherwise.
std::string output_path(const std::string& path, const std::string& name, bool several) {
  if (!several) return path;
  auto dot = path.find_last_of('.');
  auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + "." + name;
  return path.substr(0, dot) + "." + name + path.substr(dot);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::BadInput, "cannot write '" + path + "'");
  out << content;
}

std::string dump(const json& j) { return j.dump(2, ' ', false, json::error_handler_t::replace) + "\n"; }

struct BuildOptions {
  std::optional<std::string> in;
  std::optional<std::string> str;
  std::string format = "bytes";
  std::string structs = "st,dawg";
  std::optional<std::string> dot, json_path, tsv;
  std::optional<std::size_t> sigma;
  bool stats = false;
  bool words = false;
};

template <class F>
auto timed(double& ms, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = f();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

int cmd_build(const BuildOptions& o) {
  InputFormat format = o.format == "fasta" ? InputFormat::Fasta : o.format == "ints" ? InputFormat::Ints : InputFormat::Bytes;
  std::vector<std::int64_t> raw = o.in ? read_input_file(*o.in, format) : parse_input(*o.str, format);
  Text t = ingest(raw, o.sigma, format != InputFormat::Ints);

  std::vector<std::string> want = split_list(o.structs);
  for (const auto& s : want)
    if (std::find(kStructs.begin(), kStructs.end(), s) == kStructs.end())
      fail(ErrorCode::BadInput, "unknown structure '" + s + "'");
  if (want.empty()) fail(ErrorCode::BadInput, "no structure selected");
  auto wants = [&](const char* s) { return std::find(want.begin(), want.end(), s) != want.end(); };

  const bool need_wl = wants("rdawg") || wants("scdawg") || wants("lstrie");
  const bool need_affix = wants("affix") || wants("lstrie");
  const bool need_dawg = wants("dawg") || wants("cdawg") || wants("maw");
  const std::vector<Symbol> reversed(t.symbols().rbegin(), t.symbols().rend());

  json stats = {{"schema", 1}, {"n", t.size()}, {"sigma", t.distinct_symbols()}, {"structures", json::object()}};
  auto& structures = stats["structures"];
  std::map<std::string, std::string> dots;
  std::map<std::string, json> jsons;
  double ms = 0;

  SuffixTree st = timed(ms, [&] { return build_suffix_tree(t.view()); });
  if (wants("st")) {
    structures["st"] = {{"nodes", st.size()}, {"edges", st.size() - 1}, {"slinks", st.size() - 1}, {"build_ms", ms}};
    if (o.dot) dots["st"] = dot_suffix_tree(st, t);
    if (o.json_path) jsons["st"] = json_suffix_tree(st, t);
  }

  std::optional<WeinerLinks> wl;
  std::optional<Dawg> rd;
  if (need_wl) {
    rd = timed(ms, [&] {
      wl.emplace(implicit_weiner(st, explicit_weiner(st)));
      return assemble_reversed_dawg(st, *wl);
    });
    if (wants("rdawg")) {
      structures["rdawg"] = {{"nodes", rd->node_count()},
                             {"edges", rd->edge_count()},
                             {"slinks", rd->slink_count()},
                             {"explicit_links", wl->explicit_count()},
                             {"implicit_links", wl->implicit_count()},
                             {"build_ms", ms}};
      if (o.dot) dots["rdawg"] = dot_dawg(*rd, reversed, t, "reversed_dawg");
      if (o.json_path) jsons["rdawg"] = json_dawg(*rd, t);
    }
  }

  std::optional<Ast> ast;
  double ast_ms = 0;
  if (need_dawg || need_affix) ast = timed(ast_ms, [&] { return build_ast(st, black_st_nodes(st, slt_view(st))); });

  std::optional<Dawg> d;
  if (need_dawg) {
    d = timed(ms, [&] { return dawg_from_ast(*ast); });
    if (wants("dawg")) {
      structures["dawg"] = {{"nodes", d->node_count()},
                            {"edges", d->edge_count()},
                            {"slinks", d->slink_count()},
                            {"build_ms", ms + ast_ms}};
      if (o.dot) dots["dawg"] = dot_dawg(*d, t.symbols(), t, "dawg");
      if (o.json_path) jsons["dawg"] = json_dawg(*d, t);
    }
  }

  std::optional<AffixTree> at;
  if (need_affix) {
    at = timed(ms, [&] { return build_affix_tree(*ast); });
    if (wants("affix")) {
      structures["affix"] = {{"nodes", at->size()},
                             {"forward_edges", ast->size() - 1},
                             {"backward_edges", at->back.size()},
                             {"build_ms", ms + ast_ms}};
      if (o.dot) dots["affix"] = dot_affix(*at, t);
      if (o.json_path) jsons["affix"] = json_affix(*at, t);
    }
  }

  if (wants("cdawg")) {
    Cdawg c = timed(ms, [&] { return cdawg_from_dawg(*d); });
    structures["cdawg"] = {{"nodes", c.node_count()},
                           {"edges", c.edge_count()},
                           {"maximal_repeats", c.node_count() - 2},
                           {"build_ms", ms}};
    if (o.dot) dots["cdawg"] = dot_cdawg(c, t.symbols(), t, "cdawg");
    if (o.json_path) jsons["cdawg"] = json_cdawg(c, t.symbols(), t);
  }

  if (wants("scdawg")) {
    SymmetricCdawg s = timed(ms, [&] { return build_symmetric_cdawg(st, *rd); });
    structures["scdawg"] = {{"nodes", s.node_count()},
                            {"forward_edges", s.forward.edge_count()},
                            {"backward_edges", s.backward.edge_count()},
                            {"maximal_repeats", s.node_count() - 2},
                            {"build_ms", ms}};
    if (o.dot) dots["scdawg"] = dot_symmetric_cdawg(s, t, reversed);
    if (o.json_path) jsons["scdawg"] = json_symmetric_cdawg(s, t, reversed);
  }

  if (wants("lstrie")) {
    LsTrie ls = timed(ms, [&] { return build_lstrie(st, extract_mwl(*at, *wl)); });
    structures["lstrie"] = {{"nodes", ls.size()},
                            {"edges", ls.edges.size()},
                            {"type2", ls.type2_count()},
                            {"build_ms", ms}};
    if (o.dot) dots["lstrie"] = dot_lstrie(ls, t);
    if (o.json_path) jsons["lstrie"] = json_lstrie(ls, t);
  }

  std::optional<MawSet> maws;
  if (wants("maw")) {
    MawStats mstats;
    maws = timed(ms, [&] { return compute_maws(*d, t, &mstats); });
    structures["maw"] = {{"count", maws->size()},
                         {"length1", maws->length1.size()},
                         {"examined", mstats.examined},
                         {"build_ms", ms}};
    if (o.json_path) {
      json rows = json::array();
      for (const auto& m : maws->triples) rows.push_back({m.i, m.j, t.original(m.b)});
      for (auto c : maws->length1) rows.push_back({0, 0, c});
      jsons["maw"] = {{"schema", 1}, {"kind", "maw"}, {"declared_sigma", t.declared_sigma()}, {"words", rows}};
    }
  }

  const bool several = want.size() > 1;
  for (const auto& [name, content] : dots) write_file(output_path(*o.dot, name, several), content);
  for (const auto& [name, j] : jsons) write_file(output_path(*o.json_path, name, several), dump(j));
  if (maws) {
    if (o.tsv)
      write_file(*o.tsv, maw_tsv(*maws, o.words));
    else if (!o.stats)
      std::cout << maw_tsv(*maws, o.words);
  }
  const bool exported = o.dot || o.json_path || maws;
  if (o.stats || !exported) std::cout << dump(stats);
  return kOk;
}

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t max_n = 300;
  std::size_t cases = 200;
  std::string only;
};

int cmd_verify(const VerifyOptions& o) {
  VerifyConfig cfg;
  cfg.seed = o.seed;
  cfg.max_n = o.max_n;
  cfg.random_cases = o.cases;
  cfg.only = split_list(o.only);
  bool ok = true;
  run_verify(cfg, [&](const PropertyResult& r) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " inputs)";
    if (!r.passed) std::cout << ": " << r.detail << "; counterexample \"" << r.counterexample << "\"";
    std::cout << std::endl;
    ok = ok && r.passed;
  });
  return ok ? kOk : kVerifyFailed;
}

struct BenchOptions {
  std::string sizes = "1e5,2e5,4e5";
  std::size_t sigma = 256;
  std::uint64_t seed = 1;
  std::string structs = "st,rdawg,dawg,affix,cdawg,maw";
  int runs = 3;
  bool sweep = false;
};

int cmd_bench(const BenchOptions& o) {
  auto sizes = parse_sizes(o.sizes);
  auto selected = split_list(o.structs);
  for (const auto& s : selected)
    if (std::find(bench::stages().begin(), bench::stages().end(), s) == bench::stages().end())
      fail(ErrorCode::BadInput, "unknown structure '" + s + "'");
  if (sizes.empty() || o.runs < 1) fail(ErrorCode::BadInput, "need at least one size and one run");

  std::printf("%-8s %10s %8s %10s %10s %12s\n", "struct", "n", "sigma", "ms", "ratio", "maws");
  std::map<std::string, double> previous;
  for (std::size_t n : sizes) {
    auto timing = bench::measure(random_text(n, o.sigma, o.seed), selected, o.runs);
    for (const auto& s : selected) {
      const double ms = timing.median_ms.at(s);
      char ratio[32] = "-";
      if (previous.count(s) && previous[s] > 0) std::snprintf(ratio, sizeof ratio, "%.2f", ms / previous[s]);
      std::printf("%-8s %10zu %8zu %10.1f %10s %12s\n", s.c_str(), n, timing.sigma, ms, ratio,
                  s == "maw" ? std::to_string(timing.maw_count).c_str() : "");
      previous[s] = ms;
    }
  }
  if (o.sweep) {
    const std::size_t n = sizes.front();
    std::vector<std::string> structural;
    for (const auto& s : selected)
      if (s != "maw") structural.push_back(s);  // output size grows with sigma
    std::printf("\nalphabet sweep at n = %zu\n", n);
    std::map<std::string, std::pair<double, double>> range;
    for (std::size_t sigma : {std::size_t{2}, std::size_t{256}, n}) {
      auto timing = bench::measure(random_text(n, sigma, o.seed), structural, o.runs);
      for (const auto& s : structural) {
        const double ms = timing.median_ms.at(s);
        std::printf("%-8s %10zu %8zu %10.1f\n", s.c_str(), n, timing.sigma, ms);
        auto [it, fresh] = range.try_emplace(s, ms, ms);
        if (!fresh) it->second = {std::min(it->second.first, ms), std::max(it->second.second, ms)};
      }
    }
    for (const auto& [s, r] : range) std::printf("%-8s spread %.2f\n", s.c_str(), r.second / r.first);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Suffix indexing structures and minimal absent words"};
  app.require_subcommand(1);

  BuildOptions b;
  auto* build = app.add_subcommand("build", "Build structures from one input");
  auto* in = build->add_option("--in", b.in, "Input file");
  auto* str = build->add_option("--str", b.str, "Inline input");
  in->excludes(str);
  build->add_option("--format", b.format, "bytes | fasta | ints")->check(CLI::IsMember({"bytes", "fasta", "ints"}));
  build->add_option("--structs", b.structs, "Comma-separated: st,dawg,rdawg,affix,cdawg,scdawg,lstrie,maw");
  build->add_option("--dot", b.dot, "Graphviz output path");
  build->add_option("--json", b.json_path, "JSON output path");
  build->add_option("--tsv", b.tsv, "Minimal absent words as TSV");
  build->add_option("--sigma", b.sigma, "Declared alphabet size");
  build->add_flag("--stats", b.stats, "Print JSON statistics");
  build->add_flag("--words", b.words, "Add decoded words to the TSV");

  VerifyOptions v;
  auto* verify = app.add_subcommand("verify", "Check all structures against brute-force references");
  verify->add_option("--seed", v.seed, "Random seed");
  verify->add_option("--max-n", v.max_n, "Longest random input");
  verify->add_option("--cases", v.cases, "Number of random inputs");
  verify->add_option("--only", v.only, "Comma-separated: " + [] {
    std::string s;
    for (const auto& p : property_names()) s += (s.empty() ? "" : ",") + p;
    return s;
  }());

  BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "Time the builders on random texts");
  bench->add_option("--sizes", bo.sizes, "Comma-separated text lengths");
  bench->add_option("--sigma", bo.sigma, "Alphabet size");
  bench->add_option("--seed", bo.seed, "Random seed");
  bench->add_option("--structs", bo.structs, "Comma-separated stages");
  bench->add_option("--runs", bo.runs, "Runs per size (median reported)");
  bench->add_flag("--sweep", bo.sweep, "Also vary the alphabet at the first size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) {
      if (!b.in && !b.str) {
        std::cerr << "build: one of --in or --str is required\n";
        return kUsage;
      }
      return cmd_build(b);
    }
    if (*verify) return cmd_verify(v);
    return cmd_bench(bo);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::StructureCorrupt || e.code() == ErrorCode::NotSorted ? kCorrupt : kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
}
