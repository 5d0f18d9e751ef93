#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <utility>

#include "optbench/errors.hpp"

namespace optbench::detail {

inline std::string_view trim_line(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

/// Splits "a,b" into its two fields.
inline std::pair<std::string_view, std::string_view> split_pair(std::string_view line, std::size_t line_number) {
  const auto comma = line.find(',');
  if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError(line_number, "expected 2 comma-separated fields");
  }
  return {line.substr(0, comma), line.substr(comma + 1)};
}

template <class T>
T parse_field(std::string_view field, std::size_t line_number, const char* what) {
  T v{};
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
    throw ParseError(line_number, std::string("bad ") + what + " '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace optbench::detail
