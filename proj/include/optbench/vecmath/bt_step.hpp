#pragma once

#include <span>
#include <vector>

#include "optbench/pricing/bt_coefficients.hpp"
#include "optbench/vecmath/lane_config.hpp"

namespace optbench {

// One backward-induction level: out[i] = a * in[i] + b * in[i + 1],
// a = disc_p_up, b = disc_p_down. Requires in.size() >= 2 and
// out.size() == in.size() - 1.
//
// The recurrence x[i] = a x[i] + b x[i+1] carries an anti-dependency when
// computed in place. Each lane block loads both x[i..i+w) and the
// one-element-shifted x[i+1..i+w+1) before storing, and blocks advance
// upward, so no element is overwritten before its last read. On x86 this
// shifted operand is what psrldq / vperm2f128 / valignd build from the
// previous register; here an unaligned load produces it directly.
void bt_inner_step(std::span<const double> in, std::span<double> out, const BtCoefficients& coeff,
                   const LaneConfig& cfg);
void bt_inner_step(std::span<const float> in, std::span<float> out, const BtCoefficients& coeff,
                   const LaneConfig& cfg);

std::vector<double> bt_inner_step(std::span<const double> in, const BtCoefficients& coeff, const LaneConfig& cfg);

/// In-place level update over values[0 .. values.size()-1); the last slot is
/// left untouched and becomes dead after the step.
void bt_inner_step_inplace(std::span<double> values, const BtCoefficients& coeff, const LaneConfig& cfg);
void bt_inner_step_inplace(std::span<float> values, const BtCoefficients& coeff, const LaneConfig& cfg);

}  // namespace optbench
