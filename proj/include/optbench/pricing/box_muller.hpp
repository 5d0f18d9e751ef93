#pragma once

#include <cstdint>
#include <utility>

namespace optbench {

/// Maps a raw 32-bit draw into (0, 1]; never returns zero.
inline double uniform_open_low(std::uint32_t draw) {
  return (static_cast<double>(draw) + 1.0) * 0x1p-32;
}

/// Maps a raw 32-bit draw into [0, 1).
inline double uniform_open_high(std::uint32_t draw) {
  return static_cast<double>(draw) * 0x1p-32;
}

struct NormalPair {
  double first;
  double second;
};

/// Box-Muller transform. u1 must lie in (0, 1]; u1 == 0 throws DomainError.
NormalPair box_muller(double u1, double u2);

}  // namespace optbench
