#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "optbench/feed/tick.hpp"

namespace optbench {

// One tick per datagram: 4-byte little-endian sequence number followed by
// the CSV tick line. Every datagram decodes on its own.
inline constexpr std::size_t kWireSeqBytes = 4;
inline constexpr std::size_t kMaxDatagramBytes = 512;

std::string encode_datagram(const MarketTick& tick);

/// Throws ParseError / ValidationError on a malformed payload.
MarketTick decode_datagram(std::span<const std::byte> datagram);

}  // namespace optbench
