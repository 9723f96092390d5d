#ifndef TEXTIDX_VERIFY_HPP
#define TEXTIDX_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "textidx/dawg.hpp"
#include "textidx/text.hpp"

namespace textidx {

using DawgBuilder = std::function<Dawg(SymbolView)>;

struct VerifyConfig {
  std::uint64_t seed = 1;
  std::size_t max_n = 300;            // longest random core
  std::size_t random_cases = 200;
  std::size_t exhaustive_binary = 10; // all binary cores up to this length
  std::size_t exhaustive_ternary = 6;
  std::vector<std::string> only;      // property names; empty runs all
  DawgBuilder dawg_builder;           // forward DAWG under test; empty means build_dawg
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // rendered core of the first failing input
  std::string detail;
};

/// st, rdawg, dawg, maw, affix, cdawg, lstrie, bounds
const std::vector<std::string>& property_names();

/// Checks one property on one text; returns a description of the violation.
std::optional<std::string> check_property(const std::string& name, const Text& t, const DawgBuilder& dawg);

/// Runs each selected property over exhaustive small cores first, then random
/// ones, and stops a property at its first failure, so counterexamples are short.
std::vector<PropertyResult> run_verify(const VerifyConfig& cfg,
                                       const std::function<void(const PropertyResult&)>& on_result = {});

/// Random core of length n over sigma symbols. Symbols are letters when sigma <= 26.
Text random_text(std::size_t n, std::size_t sigma, std::uint64_t seed);

}  // namespace textidx

#endif  // TEXTIDX_VERIFY_HPP
