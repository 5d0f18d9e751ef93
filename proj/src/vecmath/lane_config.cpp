#include "optbench/vecmath/lane_config.hpp"

#include <charconv>

#include "optbench/errors.hpp"

namespace optbench {

std::string_view to_string(Precision precision) {
  return precision == Precision::Single ? "32" : "64";
}

Precision parse_precision(std::string_view text) {
  if (text == "32" || text == "single" || text == "float") return Precision::Single;
  if (text == "64" || text == "double") return Precision::Double;
  throw ArgumentError("precision must be 32 or 64, got '" + std::string(text) + "'");
}

bool is_supported_lane_width(std::size_t width) noexcept {
  return width == 1 || width == 4 || width == 8 || width == 16;
}

void LaneConfig::validate() const {
  if (!is_supported_lane_width(lane_width)) {
    throw ArgumentError("lane width must be one of 1, 4, 8, 16");
  }
  const std::size_t u = effective_unroll();
  if (u == 0 || u % lane_width != 0) {
    throw ArgumentError("unroll factor must be a positive multiple of the lane width");
  }
}

KernelVariant KernelVariant::parse(std::string_view label) {
  KernelVariant v;
  v.label_ = std::string(label);
  if (label == "NOVECT") {
    v.kind_ = Kind::NoVect;
    v.width_ = 1;
    return v;
  }
  if (label == "AUTOVECT") {
    v.kind_ = Kind::AutoVect;
    v.width_ = 1;
    return v;
  }
  std::string_view digits;
  if (label.starts_with("VEC")) {
    v.kind_ = Kind::Vec;
    digits = label.substr(3);
  } else if (label.starts_with("INTR")) {
    v.kind_ = Kind::Intr;
    digits = label.substr(4);
  } else {
    throw ArgumentError("unknown kernel variant '" + std::string(label) + "'");
  }
  std::size_t width = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), width);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || width == 1 ||
      !is_supported_lane_width(width)) {
    throw ArgumentError("kernel variant '" + std::string(label) + "' needs a lane width of 4, 8 or 16");
  }
  v.width_ = width;
  return v;
}

LaneConfig KernelVariant::lane_config(Precision precision) const {
  LaneConfig cfg;
  cfg.lane_width = width_;
  cfg.precision = precision;
  return cfg;
}

}  // namespace optbench
