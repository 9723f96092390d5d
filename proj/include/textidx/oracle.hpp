#ifndef TEXTIDX_ORACLE_HPP
#define TEXTIDX_ORACLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "textidx/compact.hpp"
#include "textidx/dawg.hpp"
#include "textidx/maw.hpp"
#include "textidx/text.hpp"

// Brute-force references. Nothing here shares code with the linear-time builders.

namespace textidx {

struct OracleCaps {
  std::size_t classes = 2000;   // naive_classes, oracle_minimal_dawg, naive_maximal_repeats
  std::size_t maw = 300;        // naive_maw core length
  std::size_t mf_trie = 4'000'000;  // reference_mf_trie: nodes * sigma
};

/// One distinct substring, as an occurrence interval of the text.
struct NaiveSubstring {
  std::int32_t start;   // 0-based
  std::int32_t length;
  std::int32_t r_class;  // end-position class
  std::int32_t l_class;  // begin-position class
};

/// Every distinct substring (the empty one first) with its position classes.
/// Position lists are 1-based and ascending.
struct NaiveClasses {
  SymbolView text;
  std::vector<NaiveSubstring> substrings;
  std::vector<std::vector<std::int32_t>> end_pos;  // per r_class
  std::vector<std::vector<std::int32_t>> beg_pos;  // per l_class
  std::vector<std::int32_t> rrep;  // r_class -> substring index of the longest member
  std::vector<std::int32_t> lrep;  // l_class -> substring index of the longest member

  std::vector<Symbol> str(std::int32_t index) const;
  /// Longest members, as strings, sorted.
  std::vector<std::vector<Symbol>> r_set() const;
  std::vector<std::vector<Symbol>> l_set() const;
};

NaiveClasses naive_classes(SymbolView text, std::size_t cap = OracleCaps{}.classes);

/// One node per end-position class, found by walking the suffix trie.
Dawg oracle_minimal_dawg(SymbolView text, std::size_t cap = OracleCaps{}.classes);

/// Number of distinct non-empty substrings, by the same walk.
std::uint64_t naive_distinct_substrings(SymbolView text, std::size_t cap = OracleCaps{}.classes);

/// Minimal absent words of the core over the declared alphabet, in original
/// values, sorted by (length, symbols).
std::vector<std::vector<std::int64_t>> naive_maw(const Text& t, std::size_t cap = OracleCaps{}.maw);

/// True iff w is absent from the core while both w minus its last and w minus its
/// first symbol occur (any word of length 1 absent from the core qualifies).
bool is_minimal_absent(const Text& t, std::span<const std::int64_t> w);

/// Non-empty substrings occurring at least twice whose every one-symbol
/// extension on either side occurs fewer times; sorted.
std::vector<std::vector<Symbol>> naive_maximal_repeats(SymbolView text,
                                                       std::size_t cap = OracleCaps{}.classes);

/// Breadth-first canonical numbering from the source over symbol-ordered edges.
std::vector<std::int64_t> canonical_form(const Dawg& d);
bool canonical_isomorphic(const Dawg& a, const Dawg& b);

/// The same for CDAWGs; labels are compared as decoded strings.
std::vector<std::int64_t> canonical_form(const Cdawg& c, std::span<const Symbol> text);

/// Theta(n sigma) scan: for each node and each symbol, absent here but present at
/// the suffix-link target. Same output shape as compute_maws.
MawSet reference_mf_trie(const Dawg& d, const Text& t, std::size_t cap = OracleCaps{}.mf_trie);

/// Spelled strings of all suffix-tree-like nodes given by (start, depth), sorted.
std::vector<std::vector<Symbol>> spelled(SymbolView text,
                                         std::span<const std::pair<std::int32_t, std::int32_t>> nodes);

}  // namespace textidx

#endif  // TEXTIDX_ORACLE_HPP
