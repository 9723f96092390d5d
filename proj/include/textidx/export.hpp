#ifndef TEXTIDX_EXPORT_HPP
#define TEXTIDX_EXPORT_HPP

#include <span>
#include <string>

#include "json.hpp"
#include "textidx/affix.hpp"
#include "textidx/compact.hpp"
#include "textidx/maw.hpp"
#include "textidx/rev_dawg.hpp"

namespace textidx {

/// Node captions show spelled strings up to this text length, ids beyond.
inline constexpr std::size_t kDotStringLimit = 64;

/// `indexed` is the symbol sequence the structure was built on (the text itself,
/// or its full reversal for reversed structures); `t` supplies the rendering.
std::string dot_suffix_tree(const SuffixTree& st, const Text& t);
std::string dot_dawg(const Dawg& d, std::span<const Symbol> indexed, const Text& t, const std::string& name);
std::string dot_affix(const AffixTree& at, const Text& t);
std::string dot_cdawg(const Cdawg& c, std::span<const Symbol> indexed, const Text& t, const std::string& name);
std::string dot_symmetric_cdawg(const SymmetricCdawg& s, const Text& t, std::span<const Symbol> reversed);
std::string dot_lstrie(const LsTrie& ls, const Text& t);

nlohmann::json json_suffix_tree(const SuffixTree& st, const Text& t);
nlohmann::json json_dawg(const Dawg& d, const Text& t);
nlohmann::json json_affix(const AffixTree& at, const Text& t);
nlohmann::json json_cdawg(const Cdawg& c, std::span<const Symbol> indexed, const Text& t);
nlohmann::json json_symmetric_cdawg(const SymmetricCdawg& s, const Text& t, std::span<const Symbol> reversed);
nlohmann::json json_lstrie(const LsTrie& ls, const Text& t);

/// One row per word: i, j, b, and the decoded word when `words` is set.
/// Length-1 words use i = j = 0.
std::string maw_tsv(const MawSet& ms, bool words);

}  // namespace textidx

#endif  // TEXTIDX_EXPORT_HPP
