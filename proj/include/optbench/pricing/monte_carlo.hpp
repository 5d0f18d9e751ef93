#pragma once

#include <cstdint>
#include <optional>

#include "optbench/pricing/cancel.hpp"
#include "optbench/pricing/types.hpp"
#include "optbench/vecmath/lane_config.hpp"

namespace optbench {

struct McConfig {
  std::uint64_t draws = 1'000'000;
  std::uint64_t seed = 5489;
  bool screening = true;
  // Precision of the exponential evaluation. Accumulation is always double.
  Precision precision = Precision::Double;
  LaneConfig lanes{};
};

/// Screening threshold on the standard normal draw x:
///   Thres = ln(K / (S e^{(r - σ²/2)T})) / (σ√T)
/// A call pays off iff x > Thres; a put iff x < Thres.
double mc_threshold(const OptionContract& contract, SpotPrice spot, const PricingParams& params);

/// Monte Carlo estimate of the discounted expected payoff with
/// S_T = S e^{(r - σ²/2)T + σ√T x}, x drawn from MT19937 via Box-Muller.
///
/// With screening on, only draws on the paying side of mc_threshold are
/// kept and the sum collapses to e^{-rT}/N (S e^{(r-σ²/2)T} Σ e^{σ√T x_j} - K M)
/// for calls (mirrored for puts), M the count of kept draws.
double mc_price(const OptionContract& contract, SpotPrice spot, const PricingParams& params, const McConfig& cfg);

/// Cancellable form; returns nullopt when `cancelled` fires at a checkpoint.
std::optional<double> mc_price(const OptionContract& contract, SpotPrice spot, const PricingParams& params,
                               const McConfig& cfg, const CancelCheck& cancelled);

}  // namespace optbench
