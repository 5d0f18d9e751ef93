#pragma once

#include <array>
#include <cstdint>

namespace optbench {

/// 32-bit Mersenne Twister (MT19937). Owned by one worker at a time.
class Mt19937 {
public:
  static constexpr std::size_t kStateSize = 624;
  static constexpr std::uint32_t kDefaultSeed = 5489u;

  explicit Mt19937(std::uint32_t seed = kDefaultSeed) { reseed(seed); }

  void reseed(std::uint32_t seed);
  std::uint32_t next();

  std::size_t index() const noexcept { return index_; }

private:
  void twist();

  std::array<std::uint32_t, kStateSize> words_{};
  std::size_t index_ = kStateSize;
};

/// Folds a 64-bit seed into the generator's 32-bit seed space. Values below
/// 2^32 map to themselves.
std::uint32_t fold_seed(std::uint64_t seed);

}  // namespace optbench
