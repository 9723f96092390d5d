#ifndef TEXTIDX_TEXT_HPP
#define TEXTIDX_TEXT_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textidx/types.hpp"

namespace textidx {

/// Original-value stand-in for the sentinel when decoding.
inline constexpr std::int64_t kSentinelValue = std::numeric_limits<std::int64_t>::min();

enum class InputFormat { Bytes, Fasta, Ints };

/// Sentinel-terminated, rank-compressed text.
///
/// Codes are assigned by ascending original value starting at 1; the sentinel is
/// code 0 and is the last symbol. The declared alphabet may be larger than the set
/// of occurring symbols; the missing members are only needed for length-1 absent
/// words and are synthesized as the smallest unused values above the largest
/// occurring one.
class Text {
 public:
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  SymbolView view() const noexcept { return {symbols_, dense_sigma()}; }

  /// Length including the sentinel.
  std::size_t size() const noexcept { return symbols_.size(); }
  std::size_t core_size() const noexcept { return symbols_.size() - 1; }
  /// Number of dense codes in use, sentinel included.
  Symbol dense_sigma() const noexcept { return static_cast<Symbol>(alphabet_.size()) + 1; }
  /// sigma_y: distinct symbols of the core.
  std::size_t distinct_symbols() const noexcept { return alphabet_.size(); }
  std::size_t declared_sigma() const noexcept { return declared_sigma_; }
  bool bytes() const noexcept { return bytes_; }

  /// Original value of a dense code; kSentinelValue for the sentinel.
  std::int64_t original(Symbol code) const;
  /// Dense code -> original value for codes 1..sigma_y (index 0 holds code 1).
  const std::vector<std::int64_t>& alphabet() const noexcept { return alphabet_; }
  /// Declared-alphabet members that do not occur in the core, ascending.
  std::vector<std::int64_t> absent_symbols() const;

  /// Human-readable rendering: characters for byte texts, space-separated
  /// integers otherwise. The sentinel renders as `$`.
  std::string render(std::span<const Symbol> codes) const;
  std::string render_values(std::span<const std::int64_t> values) const;

 private:
  friend Text ingest(std::span<const std::int64_t>, std::optional<std::size_t>, bool);
  friend Text reverse_core(const Text&);

  std::vector<Symbol> symbols_;
  std::vector<std::int64_t> alphabet_;
  std::size_t declared_sigma_ = 0;
  bool bytes_ = false;
};

/// Rank-compresses `raw` and appends the sentinel. `declared_sigma` defaults to
/// the number of distinct symbols. `bytes` only affects rendering.
Text ingest(std::span<const std::int64_t> raw, std::optional<std::size_t> declared_sigma = {},
            bool bytes = false);
Text ingest_bytes(std::string_view raw, std::optional<std::size_t> declared_sigma = {});

/// Reverses the non-sentinel part and re-appends the sentinel.
Text reverse_core(const Text& t);

/// Original symbols of t[i..j], 1-based inclusive.
std::vector<std::int64_t> decode_interval(const Text& t, std::size_t i, std::size_t j);

/// Parses raw input in one of the CLI formats into original symbol values.
std::vector<std::int64_t> parse_input(std::string_view content, InputFormat format);
std::vector<std::int64_t> read_input_file(const std::string& path, InputFormat format);

}  // namespace textidx

#endif  // TEXTIDX_TEXT_HPP
