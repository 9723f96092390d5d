#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bench.hpp"
#include "textidx/fwd_dawg.hpp"
#include "textidx/maw.hpp"
#include "textidx/oracle.hpp"
#include "textidx/rev_dawg.hpp"
#include "textidx/verify.hpp"

using namespace textidx;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool passed = true;
  std::string detail;
};

int failures = 0;
std::set<int> selected;

void criterion(int id, const char* name, const std::function<Outcome()>& run) {
  if (!selected.empty() && !selected.count(id)) return;
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("%s [%d] %s: %s (%.1f s)\n", o.passed ? "PASS" : "FAIL", id, name, o.detail.c_str(), seconds_since(t0));
  std::fflush(stdout);
  if (!o.passed) ++failures;
}

/// All cores of length 1..max_len over the first sigma letters, declared alphabet of size sigma.
std::vector<Text> exhaustive(std::size_t sigma, std::size_t max_len) {
  std::vector<Text> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::int64_t> w(len, 'a');
    while (true) {
      out.push_back(ingest(w, sigma, true));
      std::size_t k = 0;
      while (k < len && ++w[k] == static_cast<std::int64_t>('a' + sigma)) w[k++] = 'a';
      if (k == len) break;
    }
  }
  return out;
}

/// Random core with the declared alphabet equal to the generating one.
Text random_core(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
  std::vector<std::int64_t> raw(n);
  const bool letters = sigma <= 26;
  for (auto& c : raw) c = static_cast<std::int64_t>(rng() % sigma) + (letters ? 'a' : 1);
  return ingest(raw, sigma, letters);
}

std::vector<Text> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n,
                                const std::vector<std::size_t>& sigmas, bool with_n) {
  std::mt19937_64 rng(seed);
  std::vector<Text> out;
  const std::size_t cycle = sigmas.size() + (with_n ? 1 : 0);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = 1 + rng() % max_n;
    const std::size_t sigma = k % cycle < sigmas.size() ? sigmas[k % cycle] : n;
    out.push_back(random_core(rng, n, sigma));
  }
  return out;
}

std::string core(const Text& t) { return t.render(t.symbols().first(t.core_size())); }

Outcome property_on(const std::string& name, const std::vector<const std::vector<Text>*>& corpora) {
  std::size_t cases = 0;
  for (const auto* corpus : corpora)
    for (const Text& t : *corpus) {
      ++cases;
      if (auto bad = check_property(name, t, {})) return {false, *bad + " on \"" + core(t) + "\""};
    }
  return {true, std::to_string(cases) + " inputs"};
}

std::set<std::string> decoded(const MawSet& ms) {
  std::set<std::string> out;
  for (const auto& w : decode_maws(ms)) out.insert(std::string(w.begin(), w.end()));
  return out;
}

Outcome maw_example() {
  auto t0 = Clock::now();
  Text t = ingest_bytes("abaab", 3);
  auto got = decoded(compute_maws(build_dawg(t.view()), t));
  const double s = seconds_since(t0);
  const std::set<std::string> want{"aaa", "aaba", "bab", "bb", "c"};
  std::string list;
  for (const auto& w : got) list += (list.empty() ? "" : ",") + w;
  return {got == want && s < 1.0, "{" + list + "} in " + std::to_string(s * 1e3) + " ms"};
}

Outcome dawg_oracle() {
  auto binary = exhaustive(2, 12);
  auto ternary = exhaustive(3, 8);
  std::size_t cases = 0;
  for (const auto* corpus : {&binary, &ternary})
    for (const Text& t : *corpus) {
      ++cases;
      if (!canonical_isomorphic(build_dawg(t.view()), oracle_minimal_dawg(t.view())))
        return {false, "differs on \"" + core(t) + "\""};
    }
  return {true, std::to_string(cases) + " inputs isomorphic to the oracle"};
}

Outcome reversed_dawg() {
  std::mt19937_64 rng(20);
  const Symbol sigmas[] = {2, 4, 16};
  for (int k = 0; k < 500; ++k) {
    const Symbol sigma = sigmas[k % 3];
    const std::size_t len = rng() % 1001;
    // # w $ with # = sigma + 1 and $ = 0
    std::vector<Symbol> s{sigma + 1};
    for (std::size_t i = 0; i < len; ++i) s.push_back(1 + static_cast<Symbol>(rng() % static_cast<std::uint64_t>(sigma)));
    s.push_back(kSentinel);
    const SymbolView v{s, sigma + 2};
    std::vector<Symbol> rev(s.rbegin(), s.rend());
    const SymbolView rv{rev, sigma + 2};

    SuffixTree st = build_suffix_tree(v);
    Dawg rd = build_reversed_dawg(st);
    if (!canonical_isomorphic(rd, build_dawg(rv)))
      return {false, "differs from the forward DAWG of the reversal, case " + std::to_string(k)};
    if (!canonical_isomorphic(rd, oracle_minimal_dawg(rv)))
      return {false, "differs from the oracle, case " + std::to_string(k)};
  }
  return {true, "500 inputs"};
}

Outcome size_bounds() {
  std::mt19937_64 rng(30);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t core_n = 1 + rng() % 10000;
    const std::size_t sigmas[] = {2, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(core_n)))), core_n};
    Text t = random_core(rng, core_n, sigmas[k % 3]);
    const std::size_t n = t.size();
    Dawg d = build_dawg(t.view());
    if (n > 2 && (d.node_count() > 2 * n - 1 || d.edge_count() > 3 * n - 4))
      return {false, "n = " + std::to_string(n) + ": " + std::to_string(d.node_count()) + " nodes, " +
                         std::to_string(d.edge_count()) + " edges"};
    std::uint64_t m = t.absent_symbols().size();
    for_each_maw(d, [&](const MawTriple&) { ++m; });
    if (m < maw_lower_bound(t) || m > maw_upper_bound(t))
      return {false, "n = " + std::to_string(n) + ": " + std::to_string(m) + " absent words outside [" +
                         std::to_string(maw_lower_bound(t)) + ", " + std::to_string(maw_upper_bound(t)) + "]"};
  }
  return {true, "1000 inputs"};
}

std::vector<Text> maw_random() { return random_corpus(40, 300, 300, {2, 4, 16}, true); }

Outcome maw_oracle() {
  auto binary = exhaustive(2, 12);
  auto ternary = exhaustive(3, 8);
  auto random = maw_random();
  std::size_t cases = 0;
  for (const auto* corpus : {&binary, &ternary, &random})
    for (const Text& t : *corpus) {
      ++cases;
      Dawg d = build_dawg(t.view());
      MawSet ms = compute_maws(d, t);
      auto words = decode_maws(ms, true);
      if (words.size() != ms.size() || words != naive_maw(t)) return {false, "differs on \"" + core(t) + "\""};
      if (corpus == &random && decode_maws(reference_mf_trie(d, t), true) != words)
        return {false, "differs from the per-symbol scan on \"" + core(t) + "\""};
    }
  return {true, std::to_string(cases) + " inputs, " + std::to_string(random.size()) + " also against the scan"};
}

Outcome accounting() {
  auto binary = exhaustive(2, 12);
  auto ternary = exhaustive(3, 8);
  auto random = maw_random();
  std::size_t cases = 0;
  double worst = 0;
  auto within = [&](const Dawg& d, std::uint64_t examined, std::uint64_t emitted) {
    ++cases;
    const std::uint64_t budget = 2 * (d.edge_count() + emitted + d.node_count());
    worst = std::max(worst, static_cast<double>(examined) / static_cast<double>(budget));
    return examined <= budget;
  };
  for (const auto* corpus : {&binary, &ternary, &random})
    for (const Text& t : *corpus) {
      Dawg d = build_dawg(t.view());
      MawStats stats;
      MawSet ms = compute_maws(d, t, &stats);
      if (!within(d, stats.examined, ms.triples.size())) return {false, "budget exceeded on \"" + core(t) + "\""};
    }
  // larger inputs: count through the visitor, the output can be quadratic
  std::mt19937_64 rng(50);
  for (std::size_t n : {1000, 10000, 100000})
    for (std::size_t sigma : {std::size_t{2}, std::size_t{4}, std::size_t{256}, n}) {
      if (sigma == n && n > 10000) continue;
      Text t = random_core(rng, n, sigma);
      Dawg d = build_dawg(t.view());
      std::uint64_t emitted = 0;
      const std::uint64_t examined = for_each_maw(d, [&](const MawTriple&) { ++emitted; });
      if (!within(d, examined, emitted))
        return {false, "budget exceeded at n = " + std::to_string(n) + ", sigma = " + std::to_string(sigma)};
    }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu inputs, max examined/budget %.3f", cases, worst);
  return {true, buf};
}

Outcome scaling() {
  const std::vector<std::string> stages = bench::stages();
  const std::size_t sizes[] = {250000, 500000, 1000000};
  // rounds interleave the sizes so that a slow stretch of the machine does not land on one size
  std::vector<Text> texts;
  for (std::size_t n : sizes) texts.push_back(random_text(n, 256, 60));
  std::vector<std::map<std::string, std::vector<double>>> samples(texts.size());
  for (int round = 0; round < 5; ++round)
    for (std::size_t k = 0; k < texts.size(); ++k)
      for (const auto& [s, ms] : bench::measure(texts[k], stages, 1).median_ms) samples[k][s].push_back(ms);
  std::vector<bench::Timing> timings(texts.size());
  for (std::size_t k = 0; k < texts.size(); ++k)
    for (auto& [s, v] : samples[k]) {
      std::sort(v.begin(), v.end());
      timings[k].median_ms[s] = v[v.size() / 2];
    }

  Outcome o;
  double worst = 0;
  std::string worst_stage;
  for (std::size_t k = 1; k < timings.size(); ++k)
    for (const auto& s : stages) {
      const double r = timings[k].median_ms.at(s) / timings[k - 1].median_ms.at(s);
      if (r > worst) worst = r, worst_stage = s;
    }
  if (worst > 2.5) o.passed = false;

  auto t0 = Clock::now();
  {
    Text t = random_text(1000000, 256, 61);
    Dawg d = build_dawg(t.view());
    MawSet ms = compute_maws(d, t);
  }
  const double pipeline = seconds_since(t0);
  if (pipeline >= 10) o.passed = false;

  std::vector<std::string> structural;
  for (const auto& s : stages)
    if (s != "maw") structural.push_back(s);
  std::map<std::string, std::pair<double, double>> range;
  const std::size_t n = 500000;
  std::vector<Text> swept;
  for (std::size_t sigma : {std::size_t{2}, std::size_t{256}, n}) swept.push_back(random_text(n, sigma, 62));
  std::vector<std::map<std::string, std::vector<double>>> sweep(swept.size());
  for (int round = 0; round < 5; ++round)
    for (std::size_t k = 0; k < swept.size(); ++k)
      for (const auto& [s, ms] : bench::measure(swept[k], structural, 1).median_ms) sweep[k][s].push_back(ms);
  for (auto& per_text : sweep)
    for (auto& [s, v] : per_text) {
      std::sort(v.begin(), v.end());
      const double ms = v[v.size() / 2];
      auto [it, fresh] = range.try_emplace(s, ms, ms);
      if (!fresh) it->second = {std::min(it->second.first, ms), std::max(it->second.second, ms)};
    }
  double spread = 0;
  std::string spread_stage;
  for (const auto& [s, r] : range)
    if (r.second / r.first > spread) spread = r.second / r.first, spread_stage = s;
  if (spread >= 3) o.passed = false;

  char buf[200];
  std::snprintf(buf, sizeof buf, "worst doubling ratio %.2f (%s), pipeline at 1e6 %.2f s, alphabet spread %.2f (%s)",
                worst, worst_stage.c_str(), pipeline, spread, spread_stage.c_str());
  o.detail = buf;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  for (int k = 1; k < argc; ++k) selected.insert(std::atoi(argv[k]));
  const auto binary10 = exhaustive(2, 10);
  const auto binary12 = exhaustive(2, 12);
  const auto affix_random = random_corpus(70, 100, 200, {2, 4, 16}, false);
  const auto compact_random = random_corpus(80, 200, 200, {2, 4, 16}, true);

  criterion(1, "MAW of abaab over {a,b,c}", maw_example);
  criterion(2, "DAWG equals the minimal oracle automaton", dawg_oracle);
  criterion(3, "reversed DAWG cross-check", reversed_dawg);
  criterion(4, "DAWG and MAW size bounds", size_bounds);
  criterion(5, "MAW equals the brute force", maw_oracle);
  criterion(6, "MAW adjacency accounting", accounting);
  criterion(7, "affix tree nodes and bidirectional walks", [&] { return property_on("affix", {&binary10, &affix_random}); });
  criterion(8, "CDAWG and symmetric CDAWG", [&] { return property_on("cdawg", {&binary12, &compact_random}); });
  criterion(9, "linear-size suffix trie", [&] { return property_on("lstrie", {&binary12, &compact_random}); });
  criterion(10, "linear scaling", scaling);
  return failures == 0 ? 0 : 1;
}
