#include "textidx/text.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace textidx {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::AlphabetTooSmall: return "AlphabetTooSmall";
    case ErrorCode::ReservedSymbol: return "ReservedSymbol";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::StructureCorrupt: return "StructureCorrupt";
    case ErrorCode::NotSorted: return "NotSorted";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

std::int64_t Text::original(Symbol code) const {
  if (code == kSentinel) return kSentinelValue;
  if (code < 0 || static_cast<std::size_t>(code) > alphabet_.size())
    fail(ErrorCode::BadInput, "symbol code out of range");
  return alphabet_[static_cast<std::size_t>(code) - 1];
}

std::vector<std::int64_t> Text::absent_symbols() const {
  std::vector<std::int64_t> out;
  if (declared_sigma_ <= alphabet_.size()) return out;
  std::size_t missing = declared_sigma_ - alphabet_.size();
  std::int64_t next = alphabet_.back();
  while (out.size() < missing) {
    ++next;
    // alphabet_ is sorted and next exceeds every member, so no membership test is needed
    out.push_back(next);
  }
  return out;
}

std::string Text::render_values(std::span<const std::int64_t> values) const {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    std::int64_t v = values[k];
    if (bytes_) {
      out.push_back(v == kSentinelValue ? '$' : static_cast<char>(static_cast<unsigned char>(v)));
    } else {
      if (k) out.push_back(' ');
      out += v == kSentinelValue ? std::string("$") : std::to_string(v);
    }
  }
  return out;
}

std::string Text::render(std::span<const Symbol> codes) const {
  std::vector<std::int64_t> values;
  values.reserve(codes.size());
  for (Symbol c : codes) values.push_back(original(c));
  return render_values(values);
}

Text ingest(std::span<const std::int64_t> raw, std::optional<std::size_t> declared_sigma,
            bool bytes) {
  if (raw.empty()) fail(ErrorCode::EmptyInput, "input has no symbols");
  if (std::find(raw.begin(), raw.end(), kSentinelValue) != raw.end())
    fail(ErrorCode::ReservedSymbol, "input contains the reserved sentinel value");

  Text t;
  t.bytes_ = bytes;
  t.alphabet_.assign(raw.begin(), raw.end());
  std::sort(t.alphabet_.begin(), t.alphabet_.end());
  t.alphabet_.erase(std::unique(t.alphabet_.begin(), t.alphabet_.end()), t.alphabet_.end());

  t.declared_sigma_ = declared_sigma.value_or(t.alphabet_.size());
  if (t.declared_sigma_ < t.alphabet_.size())
    fail(ErrorCode::AlphabetTooSmall, "declared alphabet has " +
                                          std::to_string(t.declared_sigma_) + " symbols but " +
                                          std::to_string(t.alphabet_.size()) + " occur");

  t.symbols_.reserve(raw.size() + 1);
  for (std::int64_t v : raw) {
    auto it = std::lower_bound(t.alphabet_.begin(), t.alphabet_.end(), v);
    t.symbols_.push_back(static_cast<Symbol>(it - t.alphabet_.begin()) + 1);
  }
  t.symbols_.push_back(kSentinel);
  return t;
}

Text ingest_bytes(std::string_view raw, std::optional<std::size_t> declared_sigma) {
  std::vector<std::int64_t> values(raw.size());
  std::transform(raw.begin(), raw.end(), values.begin(),
                 [](char c) { return static_cast<std::int64_t>(static_cast<unsigned char>(c)); });
  return ingest(values, declared_sigma, true);
}

Text reverse_core(const Text& t) {
  Text r = t;
  std::reverse(r.symbols_.begin(), r.symbols_.end() - 1);
  return r;
}

std::vector<std::int64_t> decode_interval(const Text& t, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > t.size())
    fail(ErrorCode::BadInterval, "interval [" + std::to_string(i) + ", " + std::to_string(j) +
                                     "] outside [1, " + std::to_string(t.size()) + "]");
  std::vector<std::int64_t> out;
  out.reserve(j - i + 1);
  for (std::size_t p = i - 1; p < j; ++p) out.push_back(t.original(t.symbols()[p]));
  return out;
}

namespace {

std::vector<std::int64_t> parse_ints(std::string_view content) {
  std::vector<std::int64_t> out;
  std::size_t p = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (p < content.size()) {
    while (p < content.size() && is_space(content[p])) ++p;
    if (p == content.size()) break;
    std::size_t q = p;
    while (q < content.size() && !is_space(content[q])) ++q;
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(content.data() + p, content.data() + q, v);
    if (ec != std::errc() || end != content.data() + q)
      fail(ErrorCode::BadInput, "not a decimal integer: '" + std::string(content.substr(p, q - p)) + "'");
    out.push_back(v);
    p = q;
  }
  return out;
}

std::vector<std::int64_t> parse_fasta(std::string_view content) {
  std::vector<std::int64_t> out;
  std::istringstream in{std::string(content)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && (line[0] == '>' || line[0] == ';')) continue;
    for (char c : line)
      if (c != '\r' && c != ' ' && c != '\t') out.push_back(static_cast<unsigned char>(c));
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> parse_input(std::string_view content, InputFormat format) {
  switch (format) {
    case InputFormat::Ints: return parse_ints(content);
    case InputFormat::Fasta: return parse_fasta(content);
    case InputFormat::Bytes: break;
  }
  // a single trailing line break is not part of the text
  if (content.ends_with("\r\n"))
    content.remove_suffix(2);
  else if (content.ends_with('\n'))
    content.remove_suffix(1);
  std::vector<std::int64_t> out(content.size());
  std::transform(content.begin(), content.end(), out.begin(),
                 [](char c) { return static_cast<std::int64_t>(static_cast<unsigned char>(c)); });
  return out;
}

std::vector<std::int64_t> read_input_file(const std::string& path, InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::BadInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str(), format);
}

}  // namespace textidx
