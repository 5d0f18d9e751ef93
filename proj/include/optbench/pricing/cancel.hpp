#pragma once

#include <functional>

namespace optbench {

/// Polled by long-running kernels at fixed checkpoints (every
/// kMcCheckpointDraws draws, every kBtCheckpointLevels lattice levels).
/// Returning true abandons the computation.
using CancelCheck = std::function<bool()>;

inline constexpr std::size_t kMcCheckpointDraws = 65536;
inline constexpr std::size_t kBtCheckpointLevels = 64;

}  // namespace optbench
