#ifndef TEXTIDX_TESTS_HELPERS_HPP
#define TEXTIDX_TESTS_HELPERS_HPP

#include <set>
#include <string>
#include <vector>

#include "textidx/text.hpp"

namespace textidx::test {

inline std::string str(const Text& t, std::int32_t start, std::int32_t length) {
  return t.render(t.symbols().subspan(static_cast<std::size_t>(start), static_cast<std::size_t>(length)));
}

inline std::string word(const std::vector<std::int64_t>& w) {
  return std::string(w.begin(), w.end());
}

inline std::set<std::string> words(const std::vector<std::vector<std::int64_t>>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(word(w));
  return out;
}

}  // namespace textidx::test

#endif  // TEXTIDX_TESTS_HELPERS_HPP
