#include "optbench/pricing/black_scholes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "optbench/errors.hpp"

namespace optbench {

double norm_cdf(double x) {
  if (!std::isfinite(x)) throw DomainError("norm_cdf: non-finite argument");
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double black_scholes_price(const OptionContract& contract, SpotPrice spot, const PricingParams& params) {
  check_model_inputs(contract, spot, params);
  const double s = spot.value;
  const double k = contract.strike;
  const double t = contract.time_to_expiry;
  const double vol_sqrt_t = params.volatility * std::sqrt(t);
  const double d1 = (std::log(s / k) + (params.rate + 0.5 * params.volatility * params.volatility) * t) / vol_sqrt_t;
  const double d2 = d1 - vol_sqrt_t;
  const double discounted_strike = k * std::exp(-params.rate * t);

  // sign = +1 for calls, -1 for puts
  const double sign = contract.kind == OptionKind::Call ? 1.0 : -1.0;
  const double price = sign * (s * norm_cdf(sign * d1) - discounted_strike * norm_cdf(sign * d2));
  return std::max(price, 0.0);
}

}  // namespace optbench
