#pragma once

#include "optbench/pricing/types.hpp"

namespace optbench {

/// Standard normal cumulative distribution. Throws DomainError for non-finite x.
double norm_cdf(double x);

/// Closed-form European price. This is the accuracy reference for the
/// Monte Carlo and binomial kernels.
double black_scholes_price(const OptionContract& contract, SpotPrice spot, const PricingParams& params);

}  // namespace optbench
