#include "optbench/pricing/binomial_tree.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "optbench/errors.hpp"
#include "optbench/vecmath/bt_step.hpp"

namespace optbench {

BtCoefficients bt_coefficients(const PricingParams& params, double expiry, std::size_t n_steps) {
  if (n_steps == 0) throw ArgumentError("bt_coefficients: n_steps must be at least 1");
  if (!(params.volatility > 0.0)) throw DomainError("bt_coefficients: volatility must be positive");
  if (!(expiry > 0.0)) throw DomainError("bt_coefficients: expiry must be positive");

  BtCoefficients c;
  c.dt = expiry / static_cast<double>(n_steps);
  c.up = std::exp(params.volatility * std::sqrt(c.dt));
  c.down = 1.0 / c.up;
  const double growth = std::exp(params.rate * c.dt);
  const double p = (growth - c.down) / (c.up - c.down);
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("bt_coefficients: risk-neutral probability outside (0, 1); volatility too small for the rate");
  }
  const double discount = std::exp(-params.rate * c.dt);
  c.disc_p_up = discount * p;
  c.disc_p_down = discount * (1.0 - p);
  return c;
}

namespace {

template <class T>
std::optional<double> run(const OptionContract& contract, SpotPrice spot, const BtCoefficients& coeff,
                          const BtConfig& cfg, const CancelCheck& cancelled) {
  const std::size_t n = cfg.steps;
  const double log_up = std::log(coeff.up);
  const bool is_call = contract.kind == OptionKind::Call;

  // Leaves j = 0..n hold S u^{n-j} d^j, evaluated directly rather than by
  // repeated multiplication so rounding does not accumulate along the row.
  std::vector<T> values(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const double exponent = (static_cast<double>(n) - 2.0 * static_cast<double>(j)) * log_up;
    const double node = spot.value * std::exp(exponent);
    if (!std::isfinite(node)) throw NumericError("bt_price: lattice value overflow");
    const double payoff = is_call ? std::max(node - contract.strike, 0.0) : std::max(contract.strike - node, 0.0);
    values[j] = static_cast<T>(payoff);
  }

  for (std::size_t level = n; level > 0; --level) {
    if (cancelled && (n - level) % kBtCheckpointLevels == 0 && cancelled()) return std::nullopt;
    bt_inner_step_inplace(std::span<T>(values.data(), level + 1), coeff, cfg.lanes);
  }
  return std::max(static_cast<double>(values[0]), 0.0);
}

}  // namespace

std::optional<double> bt_price(const OptionContract& contract, SpotPrice spot, const PricingParams& params,
                               const BtConfig& cfg, const CancelCheck& cancelled) {
  check_model_inputs(contract, spot, params);
  if (cfg.steps == 0) throw ArgumentError("bt_price: n_steps must be at least 1");
  cfg.lanes.validate();
  const BtCoefficients coeff = bt_coefficients(params, contract.time_to_expiry, cfg.steps);
  if (cfg.precision == Precision::Single) return run<float>(contract, spot, coeff, cfg, cancelled);
  return run<double>(contract, spot, coeff, cfg, cancelled);
}

double bt_price(const OptionContract& contract, SpotPrice spot, const PricingParams& params, const BtConfig& cfg) {
  return *bt_price(contract, spot, params, cfg, CancelCheck{});
}

}  // namespace optbench
