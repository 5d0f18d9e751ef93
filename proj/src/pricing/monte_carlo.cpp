#include "optbench/pricing/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "optbench/errors.hpp"
#include "optbench/pricing/box_muller.hpp"
#include "optbench/pricing/mt19937.hpp"
#include "optbench/vecmath/kahan.hpp"
#include "optbench/vecmath/vexp.hpp"

namespace optbench {

double mc_threshold(const OptionContract& contract, SpotPrice spot, const PricingParams& params) {
  check_model_inputs(contract, spot, params);
  const double t = contract.time_to_expiry;
  const double sigma = params.volatility;
  const double forward_drift = spot.value * std::exp((params.rate - 0.5 * sigma * sigma) * t);
  return std::log(contract.strike / forward_drift) / (sigma * std::sqrt(t));
}

namespace {

// Fills `out` with standard normals, consuming two MT draws per pair.
void fill_normals(Mt19937& rng, std::span<double> out) {
  std::size_t i = 0;
  for (; i + 1 < out.size(); i += 2) {
    const double u1 = uniform_open_low(rng.next());
    const double u2 = uniform_open_high(rng.next());
    const NormalPair z = box_muller(u1, u2);
    out[i] = z.first;
    out[i + 1] = z.second;
  }
  if (i < out.size()) {
    const double u1 = uniform_open_low(rng.next());
    const double u2 = uniform_open_high(rng.next());
    out[i] = box_muller(u1, u2).first;
  }
}

template <class T>
struct ExpBuffer {
  std::vector<T> args;
  std::vector<T> values;

  explicit ExpBuffer(std::size_t n) : args(n), values(n) {}

  // values[0..count) = exp(args[0..count))
  void evaluate(std::size_t count, const LaneConfig& lanes) {
    const unsigned status = vexp(std::span<const T>(args.data(), count), std::span<T>(values.data(), count), lanes);
    if (status & kVexpInvalid) throw NumericError("mc_price: NaN in exponent argument");
  }
};

template <class T>
std::optional<double> run(const OptionContract& contract, SpotPrice spot, const PricingParams& params,
                          const McConfig& cfg, const CancelCheck& cancelled) {
  const double t = contract.time_to_expiry;
  const double sigma = params.volatility;
  const double vol_sqrt_t = sigma * std::sqrt(t);
  const double forward_drift = spot.value * std::exp((params.rate - 0.5 * sigma * sigma) * t);
  const double strike = contract.strike;
  const double threshold = std::log(strike / forward_drift) / vol_sqrt_t;
  const bool is_call = contract.kind == OptionKind::Call;

  Mt19937 rng(fold_seed(cfg.seed));
  const std::size_t block = std::min<std::uint64_t>(cfg.draws, kMcCheckpointDraws);
  std::vector<double> normals(block);
  ExpBuffer<T> buf(block);

  KahanAccumulator sum;
  std::uint64_t kept = 0;
  std::uint64_t remaining = cfg.draws;

  while (remaining > 0) {
    if (cancelled && cancelled()) return std::nullopt;
    const std::size_t count = std::min<std::uint64_t>(remaining, block);
    fill_normals(rng, std::span<double>(normals.data(), count));
    remaining -= count;

    if (cfg.screening) {
      std::size_t m = 0;
      for (std::size_t i = 0; i < count; ++i) {
        const double x = normals[i];
        if (is_call ? x > threshold : x < threshold) buf.args[m++] = static_cast<T>(vol_sqrt_t * x);
      }
      buf.evaluate(m, cfg.lanes);
      for (std::size_t i = 0; i < m; ++i) sum.add(static_cast<double>(buf.values[i]));
      kept += m;
    } else {
      for (std::size_t i = 0; i < count; ++i) buf.args[i] = static_cast<T>(vol_sqrt_t * normals[i]);
      buf.evaluate(count, cfg.lanes);
      for (std::size_t i = 0; i < count; ++i) {
        const double terminal = forward_drift * static_cast<double>(buf.values[i]);
        sum.add(is_call ? std::max(terminal - strike, 0.0) : std::max(strike - terminal, 0.0));
      }
    }
  }

  const double discount = std::exp(-params.rate * t) / static_cast<double>(cfg.draws);
  double total = sum.sum();
  if (cfg.screening) {
    const double strike_mass = strike * static_cast<double>(kept);
    const double asset_mass = forward_drift * total;
    total = is_call ? asset_mass - strike_mass : strike_mass - asset_mass;
  }
  return std::max(discount * total, 0.0);
}

}  // namespace

std::optional<double> mc_price(const OptionContract& contract, SpotPrice spot, const PricingParams& params,
                               const McConfig& cfg, const CancelCheck& cancelled) {
  check_model_inputs(contract, spot, params);
  if (cfg.draws == 0) throw ArgumentError("mc_price: draw count must be at least 1");
  cfg.lanes.validate();
  if (cfg.precision == Precision::Single) return run<float>(contract, spot, params, cfg, cancelled);
  return run<double>(contract, spot, params, cfg, cancelled);
}

double mc_price(const OptionContract& contract, SpotPrice spot, const PricingParams& params, const McConfig& cfg) {
  return *mc_price(contract, spot, params, cfg, CancelCheck{});
}

}  // namespace optbench
