#ifndef TEXTIDX_TOOLS_BENCH_HPP
#define TEXTIDX_TOOLS_BENCH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "textidx/text.hpp"

namespace textidx::bench {

/// Stage names in dependency order. Each stage is timed on its own, on top of
/// the structures built by the earlier stages.
const std::vector<std::string>& stages();

struct Timing {
  std::size_t n = 0;
  std::size_t sigma = 0;
  std::map<std::string, double> median_ms;
  std::uint64_t maw_count = 0;
};

/// Builds the selected stages (plus their prerequisites) `runs` times on t.
Timing measure(const Text& t, const std::vector<std::string>& selected, int runs);

}  // namespace textidx::bench

#endif  // TEXTIDX_TOOLS_BENCH_HPP
