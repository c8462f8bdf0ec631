#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rbh/error.hpp"

namespace rbh::detail {

// Line-oriented reader that remembers 1-based line numbers for diagnostics.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool at_end() const noexcept { return pos_ >= text_.size(); }
  std::size_t line_number() const noexcept { return line_; }

  /// Next line without its LF; the final line may lack one.
  std::string_view next() {
    if (at_end()) throw ParseError(line_ + 1, "unexpected end of input");
    const auto nl = text_.find('\n', pos_);
    const auto stop = nl == std::string_view::npos ? text_.size() : nl;
    std::string_view line = text_.substr(pos_, stop - pos_);
    pos_ = nl == std::string_view::npos ? text_.size() : nl + 1;
    ++line_;
    return line;
  }

  std::string_view peek() const {
    if (at_end()) return {};
    const auto nl = text_.find('\n', pos_);
    const auto stop = nl == std::string_view::npos ? text_.size() : nl;
    return text_.substr(pos_, stop - pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

inline std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline long long parse_count(std::string_view token, std::size_t line) {
  long long value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value < 0) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace rbh::detail
