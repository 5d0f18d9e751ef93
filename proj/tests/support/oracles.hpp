#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's pricing or vector code.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

// Composite Simpson's rule on [lo, hi] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double lo, double hi, std::size_t n) {
  if (n % 2) ++n;
  const double h = (hi - lo) / static_cast<double>(n);
  double acc = f(lo) + f(hi);
  for (std::size_t i = 1; i < n; ++i) acc += f(lo + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

inline double normal_density(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

// P(Z <= x) by quadrature of the density from far in the left tail.
inline double normal_cdf_quadrature(double x) {
  return simpson(normal_density, -40.0, x, 400000);
}

// Discounted expected payoff under the risk-neutral lognormal law, integrated
// over the standard normal variable driving S_T.
inline double lognormal_option_quadrature(bool is_call, double spot, double strike, double rate, double vol,
                                          double expiry) {
  const double drift = (rate - 0.5 * vol * vol) * expiry;
  const double scale = vol * std::sqrt(expiry);
  auto payoff = [&](double z) {
    const double terminal = spot * std::exp(drift + scale * z);
    const double p = is_call ? terminal - strike : strike - terminal;
    return std::max(p, 0.0) * normal_density(z);
  };
  return std::exp(-rate * expiry) * simpson(payoff, -12.0, 12.0, 2000000);
}

// Full (n+1) x (n+1) lattice, kept level by level without reuse.
inline double binomial_full_matrix(bool is_call, double spot, double strike, double rate, double vol, double expiry,
                                   std::size_t steps) {
  const double dt = expiry / static_cast<double>(steps);
  const double u = std::exp(vol * std::sqrt(dt));
  const double d = 1.0 / u;
  const double p = (std::exp(rate * dt) - d) / (u - d);
  const double disc = std::exp(-rate * dt);
  std::vector<std::vector<double>> price(steps + 1), value(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    price[i].resize(i + 1);
    value[i].resize(i + 1);
  }
  price[0][0] = spot;
  for (std::size_t i = 0; i < steps; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      price[i + 1][j] = price[i][j] * u;
      price[i + 1][j + 1] = price[i][j] * d;
    }
  }
  for (std::size_t j = 0; j <= steps; ++j) {
    const double s = price[steps][j];
    value[steps][j] = std::max(is_call ? s - strike : strike - s, 0.0);
  }
  for (std::size_t i = steps; i-- > 0;) {
    for (std::size_t j = 0; j <= i; ++j) {
      value[i][j] = disc * (p * value[i + 1][j] + (1.0 - p) * value[i + 1][j + 1]);
    }
  }
  return value[0][0];
}

}  // namespace oracle
