#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace optbench {

enum class Precision { Single, Double };

std::string_view to_string(Precision precision);
Precision parse_precision(std::string_view text);  // "32" | "64"

/// Lane configuration for the vector kernels. lane_width 1 selects the
/// scalar fallback. unroll is the number of elements handled per loop
/// iteration and defaults to the lane width.
struct LaneConfig {
  std::size_t lane_width = 1;
  Precision precision = Precision::Double;
  std::size_t unroll = 0;  // 0 means "same as lane_width"
  bool fused = false;      // use fma for a*x + b*y

  std::size_t effective_unroll() const noexcept { return unroll == 0 ? lane_width : unroll; }
  void validate() const;
};

bool is_supported_lane_width(std::size_t width) noexcept;

/// Kernel build label carried verbatim into reports.
///   NOVECT    scalar loop, lane width 1
///   AUTOVECT  plain loop left to the compiler's vectorizer
///   VEC<w>    portable lane-parallel path, w lanes
///   INTR<w>   same path as VEC<w>; kept as a separate label so reports
///             can distinguish hand-vectorized builds
class KernelVariant {
public:
  enum class Kind { NoVect, AutoVect, Vec, Intr };

  KernelVariant() = default;
  static KernelVariant parse(std::string_view label);

  Kind kind() const noexcept { return kind_; }
  std::size_t width() const noexcept { return width_; }
  const std::string& label() const noexcept { return label_; }

  LaneConfig lane_config(Precision precision) const;

private:
  Kind kind_ = Kind::NoVect;
  std::size_t width_ = 1;
  std::string label_ = "NOVECT";
};

}  // namespace optbench
