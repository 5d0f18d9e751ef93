#pragma once

#include <span>
#include <vector>

#include "optbench/vecmath/lane_config.hpp"

namespace optbench {

/// Status bits raised by vexp. Out-of-range inputs saturate rather than throw.
enum VexpStatus : unsigned {
  kVexpOk = 0,
  kVexpOverflow = 1u << 0,   // result saturated to +inf
  kVexpUnderflow = 1u << 1,  // result flushed to 0
  kVexpInvalid = 1u << 2,    // NaN input
};

/// Elementwise exponential using Cephes-style range reduction
/// exp(x) = 2^k * exp(r), |r| <= ln2/2, followed by a polynomial in r
/// (degree-6 minimax for float, Pade rational for double). out.size()
/// must equal in.size(). Each element goes through the same arithmetic
/// regardless of cfg.lane_width.
unsigned vexp(std::span<const float> in, std::span<float> out, const LaneConfig& cfg);
unsigned vexp(std::span<const double> in, std::span<double> out, const LaneConfig& cfg);

std::vector<float> vexp(std::span<const float> in, const LaneConfig& cfg, unsigned* status = nullptr);
std::vector<double> vexp(std::span<const double> in, const LaneConfig& cfg, unsigned* status = nullptr);

/// Single-element form of the same algorithm.
float vexp_scalar(float x);
double vexp_scalar(double x);

}  // namespace optbench
