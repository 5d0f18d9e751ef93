#include "optbench/feed/tick.hpp"

#include <charconv>
#include <cmath>

#include "optbench/errors.hpp"

namespace optbench {

namespace {

std::string_view trim_cr(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace

void validate_symbol(std::string_view symbol) {
  if (symbol.empty() || symbol.size() > kMaxSymbolLength) {
    throw ValidationError("symbol must be 1.." + std::to_string(kMaxSymbolLength) + " characters");
  }
  for (char c : symbol) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x21 || u > 0x7e || c == ',') throw ValidationError("symbol must be printable ASCII without commas");
  }
}

MarketTick parse_tick_line(std::string_view line, std::size_t line_number, std::uint64_t seq) {
  line = trim_cr(line);
  const auto first = line.find(',');
  const auto second = first == std::string_view::npos ? first : line.find(',', first + 1);
  if (second == std::string_view::npos || line.find(',', second + 1) != std::string_view::npos) {
    throw ParseError(line_number, "expected 3 comma-separated fields");
  }
  const std::string_view ts_field = line.substr(0, first);
  const std::string_view symbol = line.substr(first + 1, second - first - 1);
  const std::string_view price_field = line.substr(second + 1);

  MarketTick tick;
  tick.seq = seq;
  auto [ts_end, ts_ec] = std::from_chars(ts_field.data(), ts_field.data() + ts_field.size(), tick.timestamp_ns);
  if (ts_ec != std::errc{} || ts_end != ts_field.data() + ts_field.size() || ts_field.empty()) {
    throw ParseError(line_number, "bad timestamp '" + std::string(ts_field) + "'");
  }
  if (tick.timestamp_ns < 0) throw ParseError(line_number, "negative timestamp");

  try {
    validate_symbol(symbol);
  } catch (const ValidationError& e) {
    throw ParseError(line_number, e.what());
  }
  tick.symbol = std::string(symbol);

  auto [px_end, px_ec] = std::from_chars(price_field.data(), price_field.data() + price_field.size(), tick.price);
  if (px_ec != std::errc{} || px_end != price_field.data() + price_field.size() || price_field.empty()) {
    throw ParseError(line_number, "bad price '" + std::string(price_field) + "'");
  }
  if (!(tick.price > 0.0) || !std::isfinite(tick.price)) {
    throw ValidationError("line " + std::to_string(line_number) + ": price must be positive");
  }
  return tick;
}

std::string format_tick_line(const MarketTick& tick) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, tick.price);
  std::string out = std::to_string(tick.timestamp_ns);
  out += ',';
  out += tick.symbol;
  out += ',';
  out.append(buf, end);
  return out;
}

}  // namespace optbench
