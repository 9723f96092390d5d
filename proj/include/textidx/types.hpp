#ifndef TEXTIDX_TYPES_HPP
#define TEXTIDX_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace textidx {

/// Dense symbol code. Code 0 is reserved for the sentinel of a Text.
using Symbol = std::int32_t;
/// Index into a node table. Every structure numbers its nodes densely from 0.
using NodeId = std::int32_t;

inline constexpr NodeId kNoNode = -1;
inline constexpr Symbol kSentinel = 0;

enum class ErrorCode {
  EmptyInput,
  AlphabetTooSmall,
  ReservedSymbol,
  BadInterval,
  StructureCorrupt,
  NotSorted,
  CapExceeded,
  BadInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

/// Integrity guard for builders. Failing it means the structure is internally inconsistent.
inline void check_structure(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::StructureCorrupt, what);
}

/// Read-only view of a dense symbol sequence whose last symbol occurs exactly once.
/// Every builder works on this view so that texts with a front sentinel (reversals
/// of sentinel-terminated texts) can be indexed directly.
struct SymbolView {
  std::span<const Symbol> symbols;
  Symbol sigma = 0;  // all codes lie in [0, sigma)

  std::size_t size() const noexcept { return symbols.size(); }
  Symbol operator[](std::size_t i) const noexcept { return symbols[i]; }
};

}  // namespace textidx

#endif  // TEXTIDX_TYPES_HPP
