#include "optbench/pricing/mt19937.hpp"

namespace optbench {

namespace {

constexpr std::size_t kShift = 397;
constexpr std::uint32_t kMatrixA = 0x9908b0dfu;
constexpr std::uint32_t kUpperMask = 0x80000000u;
constexpr std::uint32_t kLowerMask = 0x7fffffffu;

}  // namespace

void Mt19937::reseed(std::uint32_t seed) {
  words_[0] = seed;
  for (std::size_t i = 1; i < kStateSize; ++i) {
    const std::uint32_t prev = words_[i - 1];
    words_[i] = 1812433253u * (prev ^ (prev >> 30)) + static_cast<std::uint32_t>(i);
  }
  index_ = kStateSize;
}

void Mt19937::twist() {
  for (std::size_t i = 0; i < kStateSize; ++i) {
    const std::uint32_t y = (words_[i] & kUpperMask) | (words_[(i + 1) % kStateSize] & kLowerMask);
    std::uint32_t next = words_[(i + kShift) % kStateSize] ^ (y >> 1);
    if (y & 1u) next ^= kMatrixA;
    words_[i] = next;
  }
  index_ = 0;
}

std::uint32_t Mt19937::next() {
  if (index_ >= kStateSize) twist();
  std::uint32_t y = words_[index_++];
  // tempering
  y ^= y >> 11;
  y ^= (y << 7) & 0x9d2c5680u;
  y ^= (y << 15) & 0xefc60000u;
  y ^= y >> 18;
  return y;
}

std::uint32_t fold_seed(std::uint64_t seed) {
  return static_cast<std::uint32_t>(seed) ^ static_cast<std::uint32_t>(seed >> 32);
}

}  // namespace optbench
