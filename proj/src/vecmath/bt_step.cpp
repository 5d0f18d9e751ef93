#include "optbench/vecmath/bt_step.hpp"

#include "optbench/errors.hpp"
#include "optbench/vecmath/lanes.hpp"

namespace optbench {

namespace {

using simd::Lanes;

template <class T, std::size_t W, bool Fused>
void step_block(const T* src, T* dst, const Lanes<T, W>& a, const Lanes<T, W>& b) {
  const auto here = Lanes<T, W>::load(src);
  const auto next = Lanes<T, W>::load(src + 1);
  if constexpr (Fused) {
    simd::fma(a, here, b * next).store(dst);
  } else {
    (a * here + b * next).store(dst);
  }
}

// src and dst may alias with dst == src.
template <class T, std::size_t W, bool Fused>
void step_lanes(const T* src, T* dst, std::size_t count, T a, T b, std::size_t unroll) {
  const auto va = Lanes<T, W>::broadcast(a);
  const auto vb = Lanes<T, W>::broadcast(b);
  const auto sa = Lanes<T, 1>::broadcast(a);
  const auto sb = Lanes<T, 1>::broadcast(b);
  std::size_t i = 0;
  for (; i + unroll <= count; i += unroll) {
    for (std::size_t k = 0; k < unroll; k += W) step_block<T, W, Fused>(src + i + k, dst + i + k, va, vb);
  }
  for (; i < count; ++i) step_block<T, 1, Fused>(src + i, dst + i, sa, sb);
}

template <class T>
void dispatch(const T* src, T* dst, std::size_t count, const BtCoefficients& coeff, const LaneConfig& cfg) {
  cfg.validate();
  const T a = static_cast<T>(coeff.disc_p_up);
  const T b = static_cast<T>(coeff.disc_p_down);
  const std::size_t u = cfg.effective_unroll();
  if (cfg.fused) {
    switch (cfg.lane_width) {
      case 1: return step_lanes<T, 1, true>(src, dst, count, a, b, u);
      case 4: return step_lanes<T, 4, true>(src, dst, count, a, b, u);
      case 8: return step_lanes<T, 8, true>(src, dst, count, a, b, u);
      case 16: return step_lanes<T, 16, true>(src, dst, count, a, b, u);
    }
  } else {
    switch (cfg.lane_width) {
      case 1: return step_lanes<T, 1, false>(src, dst, count, a, b, u);
      case 4: return step_lanes<T, 4, false>(src, dst, count, a, b, u);
      case 8: return step_lanes<T, 8, false>(src, dst, count, a, b, u);
      case 16: return step_lanes<T, 16, false>(src, dst, count, a, b, u);
    }
  }
}

template <class T>
void checked_step(std::span<const T> in, std::span<T> out, const BtCoefficients& coeff, const LaneConfig& cfg) {
  if (in.size() < 2) throw ArgumentError("bt_inner_step: need at least two values");
  if (out.size() != in.size() - 1) throw ArgumentError("bt_inner_step: output must be one shorter than input");
  dispatch(in.data(), out.data(), out.size(), coeff, cfg);
}

template <class T>
void checked_inplace(std::span<T> values, const BtCoefficients& coeff, const LaneConfig& cfg) {
  if (values.size() < 2) throw ArgumentError("bt_inner_step: need at least two values");
  dispatch(values.data(), values.data(), values.size() - 1, coeff, cfg);
}

}  // namespace

void bt_inner_step(std::span<const double> in, std::span<double> out, const BtCoefficients& coeff,
                   const LaneConfig& cfg) {
  checked_step(in, out, coeff, cfg);
}

void bt_inner_step(std::span<const float> in, std::span<float> out, const BtCoefficients& coeff,
                   const LaneConfig& cfg) {
  checked_step(in, out, coeff, cfg);
}

std::vector<double> bt_inner_step(std::span<const double> in, const BtCoefficients& coeff, const LaneConfig& cfg) {
  if (in.size() < 2) throw ArgumentError("bt_inner_step: need at least two values");
  std::vector<double> out(in.size() - 1);
  checked_step(in, std::span<double>(out), coeff, cfg);
  return out;
}

void bt_inner_step_inplace(std::span<double> values, const BtCoefficients& coeff, const LaneConfig& cfg) {
  checked_inplace(values, coeff, cfg);
}

void bt_inner_step_inplace(std::span<float> values, const BtCoefficients& coeff, const LaneConfig& cfg) {
  checked_inplace(values, coeff, cfg);
}

}  // namespace optbench
