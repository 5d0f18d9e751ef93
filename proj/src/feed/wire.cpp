#include "optbench/feed/wire.hpp"

#include <string_view>

#include "optbench/errors.hpp"

namespace optbench {

std::string encode_datagram(const MarketTick& tick) {
  const auto seq = static_cast<std::uint32_t>(tick.seq);
  std::string out(kWireSeqBytes, '\0');
  for (std::size_t i = 0; i < kWireSeqBytes; ++i) out[i] = static_cast<char>((seq >> (8 * i)) & 0xffu);
  out += format_tick_line(tick);
  return out;
}

MarketTick decode_datagram(std::span<const std::byte> datagram) {
  if (datagram.size() <= kWireSeqBytes) throw ParseError(0, "datagram too short");
  std::uint32_t seq = 0;
  for (std::size_t i = 0; i < kWireSeqBytes; ++i) seq |= std::to_integer<std::uint32_t>(datagram[i]) << (8 * i);
  const std::string_view payload(reinterpret_cast<const char*>(datagram.data()) + kWireSeqBytes,
                                 datagram.size() - kWireSeqBytes);
  return parse_tick_line(payload, 0, seq);
}

}  // namespace optbench
