#include "optbench/vecmath/vexp.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>

#include "optbench/errors.hpp"
#include "optbench/vecmath/lanes.hpp"

namespace optbench {

namespace {

using simd::Lanes;

template <class T>
struct ExpConstants;

// Cephes expf.c
template <>
struct ExpConstants<float> {
  using Bits = std::uint32_t;
  static constexpr float kLog2e = 1.44269504088896341f;
  static constexpr float kC1 = 0.693359375f;
  static constexpr float kC2 = -2.12194440e-4f;
  static constexpr float kMaxArg = 88.72283905206835f;  // ln(FLT_MAX)
  static constexpr float kMinArg = -87.33654475055310f; // ln(FLT_MIN)
  static constexpr int kMantissaBits = 23;
  static constexpr int kBias = 127;
};

// Cephes exp.c
template <>
struct ExpConstants<double> {
  using Bits = std::uint64_t;
  static constexpr double kLog2e = 1.4426950408889634073599;
  static constexpr double kC1 = 6.93145751953125E-1;
  static constexpr double kC2 = 1.42860682030941723212E-6;
  static constexpr double kMaxArg = 7.09782712893383996843E2;   // ln(DBL_MAX)
  static constexpr double kMinArg = -7.08396418532264106224E2;  // ln(DBL_MIN)
  static constexpr int kMantissaBits = 52;
  static constexpr int kBias = 1023;
};

// 2^n for n within the normal exponent range, built from the bit pattern.
template <class T, std::size_t W>
Lanes<T, W> pow2(const Lanes<T, W>& n) {
  using C = ExpConstants<T>;
  using Bits = typename C::Bits;
  Lanes<T, W> r;
  for (std::size_t i = 0; i < W; ++i) {
    const Bits bits = static_cast<Bits>(static_cast<std::int64_t>(n.v[i]) + C::kBias) << C::kMantissaBits;
    std::memcpy(&r.v[i], &bits, sizeof(T));
  }
  return r;
}

// Polynomial part for |r| <= ln2/2.
template <std::size_t W>
Lanes<float, W> exp_reduced(const Lanes<float, W>& r) {
  using L = Lanes<float, W>;
  const L z = r * r;
  L y = L::broadcast(1.9875691500E-4f);
  y = y * r + L::broadcast(1.3981999507E-3f);
  y = y * r + L::broadcast(8.3334519073E-3f);
  y = y * r + L::broadcast(4.1665795894E-2f);
  y = y * r + L::broadcast(1.6666665459E-1f);
  y = y * r + L::broadcast(5.0000001201E-1f);
  return y * z + r + L::broadcast(1.0f);
}

template <std::size_t W>
Lanes<double, W> exp_reduced(const Lanes<double, W>& r) {
  using L = Lanes<double, W>;
  const L xx = r * r;
  L p = L::broadcast(1.26177193074810590878E-4);
  p = p * xx + L::broadcast(3.02994407707441961300E-2);
  p = p * xx + L::broadcast(9.99999999999999999910E-1);
  p = p * r;
  L q = L::broadcast(3.00198505138664455042E-6);
  q = q * xx + L::broadcast(2.52448340349684104192E-3);
  q = q * xx + L::broadcast(2.27265548208155028766E-1);
  q = q * xx + L::broadcast(2.00000000000000000009E0);
  const L ratio = p / (q - p);
  return L::broadcast(1.0) + L::broadcast(2.0) * ratio;
}

// Core for inputs already clamped to [kMinArg, kMaxArg].
template <class T, std::size_t W>
Lanes<T, W> exp_core(Lanes<T, W> x) {
  using C = ExpConstants<T>;
  using L = Lanes<T, W>;
  const L n = simd::floor(x * L::broadcast(C::kLog2e) + L::broadcast(T(0.5)));
  // C1 has few significant bits so n*C1 is exact and the first subtraction
  // loses nothing.
  x = x - n * L::broadcast(C::kC1);
  x = x - n * L::broadcast(C::kC2);
  const L y = exp_reduced(x);
  // Split the scale so each factor stays a normal number even for n = 128 / 1024.
  L half;
  for (std::size_t i = 0; i < W; ++i) half.v[i] = std::floor(n.v[i] * T(0.5));
  return y * pow2(half) * pow2(n - half);
}

template <class T>
unsigned classify(T x, T& out) {
  using C = ExpConstants<T>;
  if (std::isnan(x)) {
    out = x;
    return kVexpInvalid;
  }
  if (x > C::kMaxArg) {
    out = std::numeric_limits<T>::infinity();
    return kVexpOverflow;
  }
  if (x < C::kMinArg) {
    out = T(0);
    return kVexpUnderflow;
  }
  return kVexpOk;
}

template <class T, std::size_t W>
unsigned run_block(const T* in, T* out) {
  using C = ExpConstants<T>;
  using L = Lanes<T, W>;
  L x = L::load(in);
  L clamped = simd::max(simd::min(x, L::broadcast(C::kMaxArg)), L::broadcast(C::kMinArg));
  // NaN lanes: max/min above keep the constant, replaced in the fix-up pass.
  exp_core(clamped).store(out);
  unsigned status = kVexpOk;
  for (std::size_t i = 0; i < W; ++i) {
    T fixed;
    const unsigned s = classify(in[i], fixed);
    if (s != kVexpOk) {
      out[i] = fixed;
      status |= s;
    }
  }
  return status;
}

template <class T, std::size_t W>
unsigned run_lanes(std::span<const T> in, std::span<T> out, std::size_t unroll) {
  const std::size_t n = in.size();
  std::size_t i = 0;
  unsigned status = kVexpOk;
  for (; i + unroll <= n; i += unroll) {
    for (std::size_t k = 0; k < unroll; k += W) status |= run_block<T, W>(in.data() + i + k, out.data() + i + k);
  }
  // scalar tail
  for (; i < n; ++i) status |= run_block<T, 1>(in.data() + i, out.data() + i);
  return status;
}

template <class T>
unsigned dispatch(std::span<const T> in, std::span<T> out, const LaneConfig& cfg) {
  cfg.validate();
  if (in.size() != out.size()) throw ArgumentError("vexp: input and output sizes differ");
  const std::size_t unroll = cfg.effective_unroll();
  switch (cfg.lane_width) {
    case 1: return run_lanes<T, 1>(in, out, unroll);
    case 4: return run_lanes<T, 4>(in, out, unroll);
    case 8: return run_lanes<T, 8>(in, out, unroll);
    case 16: return run_lanes<T, 16>(in, out, unroll);
  }
  throw ArgumentError("vexp: unsupported lane width");
}

template <class T>
T scalar(T x) {
  T out;
  run_block<T, 1>(&x, &out);
  return out;
}

}  // namespace

unsigned vexp(std::span<const float> in, std::span<float> out, const LaneConfig& cfg) {
  return dispatch(in, out, cfg);
}

unsigned vexp(std::span<const double> in, std::span<double> out, const LaneConfig& cfg) {
  return dispatch(in, out, cfg);
}

std::vector<float> vexp(std::span<const float> in, const LaneConfig& cfg, unsigned* status) {
  std::vector<float> out(in.size());
  const unsigned s = vexp(in, std::span<float>(out), cfg);
  if (status) *status = s;
  return out;
}

std::vector<double> vexp(std::span<const double> in, const LaneConfig& cfg, unsigned* status) {
  std::vector<double> out(in.size());
  const unsigned s = vexp(in, std::span<double>(out), cfg);
  if (status) *status = s;
  return out;
}

float vexp_scalar(float x) { return scalar(x); }
double vexp_scalar(double x) { return scalar(x); }

}  // namespace optbench
