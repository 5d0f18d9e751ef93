#include <doctest.h>

#include <cmath>
#include <random>

#include "optbench/errors.hpp"
#include "optbench/pricing/binomial_tree.hpp"
#include "optbench/pricing/black_scholes.hpp"
#include "oracles.hpp"

using namespace optbench;

namespace {

OptionContract contract(OptionKind kind, double strike, double expiry) {
  return OptionContract{"c", kind, strike, expiry};
}

double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }


}  // namespace

TEST_CASE("coefficients for a single step") {
  const auto c = bt_coefficients({0.0, 0.2}, 1.0, 1);
  CHECK(c.up == std::exp(0.2));
  CHECK(c.down == doctest::Approx(std::exp(-0.2)).epsilon(1e-15));
  CHECK(c.dt == 1.0);
}

TEST_CASE("coefficient invariants over random parameters") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> rate(0.0, 0.1), vol(0.05, 1.0), expiry(0.05, 3.0);
  std::uniform_int_distribution<std::size_t> steps(1, 10000);
  for (int i = 0; i < 2000; ++i) {
    const PricingParams p{rate(gen), vol(gen)};
    const double t = expiry(gen);
    const auto c = bt_coefficients(p, t, steps(gen));
    CHECK(std::abs(c.up * c.down - 1.0) <= 0x1p-52);
    CHECK(c.disc_p_up > 0.0);
    CHECK(c.disc_p_down > 0.0);
    const double disc = std::exp(-p.rate * c.dt);
    CHECK(std::abs(c.disc_p_up + c.disc_p_down - disc) <= 4 * std::nextafter(disc, 2.0) - 4 * disc);
  }
}

TEST_CASE("discounted weights sum against an extended-precision oracle") {
  const auto c = bt_coefficients({0.05, 0.2}, 1.0, 5000);
  const long double dt = 1.0L / 5000.0L;
  const long double u = std::exp(0.2L * std::sqrt(dt));
  const long double d = 1.0L / u;
  const long double p = (std::exp(0.05L * dt) - d) / (u - d);
  const long double disc = std::exp(-0.05L * dt);
  const double expected = static_cast<double>(disc * p + disc * (1.0L - p));
  const double ulp = std::nextafter(expected, 2.0) - expected;
  CHECK(std::abs((c.disc_p_up + c.disc_p_down) - expected) <= 4 * ulp);
  CHECK(std::abs(static_cast<double>(disc) - std::exp(-0.05 / 5000)) <= ulp);
}

TEST_CASE("coefficient errors") {
  CHECK_THROWS_AS(bt_coefficients({0.0, 0.2}, 1.0, 0), ArgumentError);
  CHECK_THROWS_AS(bt_coefficients({0.0, 0.0}, 1.0, 10), DomainError);
  // drift beyond the up factor: p > 1
  CHECK_THROWS_AS(bt_coefficients({0.5, 1e-4}, 1.0, 10), DomainError);
}

TEST_CASE("one-step tree by hand") {
  const double u = std::exp(0.2), d = std::exp(-0.2);
  const double p = (1.0 - d) / (u - d);
  const double expected = p * std::max(100.0 * u - 100.0, 0.0) + (1 - p) * std::max(100.0 * d - 100.0, 0.0);
  BtConfig cfg;
  cfg.steps = 1;
  CHECK(bt_price(contract(OptionKind::Call, 100, 1), {100}, {0.0, 0.2}, cfg) ==
        doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("5000 steps reaches Black-Scholes within 0.1%") {
  BtConfig cfg;
  cfg.steps = 5000;
  for (auto kind : {OptionKind::Call, OptionKind::Put}) {
    const auto c = contract(kind, 100, 1);
    const PricingParams p{0.0, 0.2};
    CHECK(relative(bt_price(c, {100}, p, cfg), black_scholes_price(c, {100}, p)) < 1e-3);
  }
}

TEST_CASE("out-of-the-money leaves price to zero") {
  BtConfig cfg;
  cfg.steps = 100;
  // every leaf S u^{n-2j} with σ=1e-6 stays within 1e-4 of S, far above K
  CHECK(bt_price(contract(OptionKind::Put, 50, 1), {100}, {0.0, 1e-6}, cfg) == 0.0);
}

TEST_CASE("in-place vector matches the full-matrix lattice") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> strike(70, 130), rate(0.0, 0.08), vol(0.1, 0.6), expiry(0.1, 2.0);
  std::uniform_int_distribution<std::size_t> steps(1, 100);
  for (int i = 0; i < 200; ++i) {
    const bool is_call = i % 2 == 0;
    const auto c = contract(is_call ? OptionKind::Call : OptionKind::Put, strike(gen), expiry(gen));
    const PricingParams p{rate(gen), vol(gen)};
    BtConfig cfg;
    cfg.steps = steps(gen);
    cfg.lanes.lane_width = (i % 3 == 0) ? 1 : (i % 3 == 1 ? 8 : 16);
    const double oracle_value =
        oracle::binomial_full_matrix(is_call, 100, c.strike, p.rate, p.volatility, c.time_to_expiry, cfg.steps);
    const double ours = bt_price(c, {100}, p, cfg);
    CHECK(std::abs(ours - oracle_value) <= 1e-10 * std::max(1.0, oracle_value));
  }
}

TEST_CASE("convergence improves from 400 to 4000 steps") {
  const double strikes[] = {80, 85, 90, 95, 100, 105, 110, 115, 120, 100};
  double err_coarse = 0.0, err_fine = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto c = contract(i % 2 ? OptionKind::Put : OptionKind::Call, strikes[i], i < 5 ? 1.0 : 0.5);
    const PricingParams p{0.03, 0.25};
    const double bs = black_scholes_price(c, {100}, p);
    BtConfig cfg;
    cfg.steps = 400;
    err_coarse += relative(bt_price(c, {100}, p, cfg), bs);
    cfg.steps = 4000;
    err_fine += relative(bt_price(c, {100}, p, cfg), bs);
  }
  CHECK(err_fine < err_coarse);
}

TEST_CASE("lattice overflow and argument errors") {
  BtConfig cfg;
  cfg.steps = 5000;
  CHECK_THROWS_AS(bt_price(contract(OptionKind::Call, 100, 10), {100}, {0.0, 5.0}, cfg), NumericError);
  cfg.steps = 0;
  CHECK_THROWS_AS(bt_price(contract(OptionKind::Call, 100, 1), {100}, {0.0, 0.2}, cfg), ArgumentError);
}

TEST_CASE("bt observes cancellation every 64 levels") {
  BtConfig cfg;
  cfg.steps = 1000;
  int polls = 0;
  const auto r = bt_price(contract(OptionKind::Call, 100, 1), {100}, {0.0, 0.2}, cfg, [&] { return ++polls == 4; });
  CHECK_FALSE(r.has_value());
  CHECK(polls == 4);
}
