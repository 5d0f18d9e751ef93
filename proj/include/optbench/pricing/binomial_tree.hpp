#pragma once

#include <cstddef>
#include <optional>

#include "optbench/pricing/bt_coefficients.hpp"
#include "optbench/pricing/cancel.hpp"
#include "optbench/pricing/types.hpp"
#include "optbench/vecmath/lane_config.hpp"

namespace optbench {

/// CRR factors for a lattice of n_steps levels over `expiry` years:
///   dt = expiry / n_steps, u = e^{σ√dt}, d = 1/u,
///   p = (e^{r dt} - d) / (u - d), a = e^{-r dt} p, b = e^{-r dt} (1 - p).
/// Throws ArgumentError for n_steps == 0 and DomainError when p falls
/// outside (0, 1) (drift too large for the volatility step).
BtCoefficients bt_coefficients(const PricingParams& params, double expiry, std::size_t n_steps);

struct BtConfig {
  std::size_t steps = 5000;
  Precision precision = Precision::Double;
  LaneConfig lanes{};
};

/// European price by backward induction over a single in-place vector of
/// n_steps + 1 node values.
double bt_price(const OptionContract& contract, SpotPrice spot, const PricingParams& params, const BtConfig& cfg);

std::optional<double> bt_price(const OptionContract& contract, SpotPrice spot, const PricingParams& params,
                               const BtConfig& cfg, const CancelCheck& cancelled);

}  // namespace optbench
