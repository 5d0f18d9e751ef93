#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace optbench {

inline constexpr std::size_t kMaxSymbolLength = 15;

struct MarketTick {
  std::uint64_t seq = 0;
  std::int64_t timestamp_ns = 0;  // since session start
  std::string symbol;
  double price = 0.0;

  friend bool operator==(const MarketTick&, const MarketTick&) = default;
};

/// Parses `<timestamp_ns>,<symbol>,<price>`. Malformed fields raise
/// ParseError carrying `line_number`; a non-positive price raises
/// ValidationError.
MarketTick parse_tick_line(std::string_view line, std::size_t line_number = 1, std::uint64_t seq = 0);

/// Canonical CSV form; prices use the shortest round-trip representation.
std::string format_tick_line(const MarketTick& tick);

void validate_symbol(std::string_view symbol);

}  // namespace optbench
