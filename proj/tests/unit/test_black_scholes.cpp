#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "optbench/errors.hpp"
#include "optbench/pricing/black_scholes.hpp"
#include "oracles.hpp"

using namespace optbench;

namespace {

OptionContract contract(OptionKind kind, double strike, double expiry) {
  return OptionContract{"c", kind, strike, expiry};
}

}  // namespace

TEST_CASE("norm_cdf basics") {
  CHECK(norm_cdf(0.0) == 0.5);
  CHECK(norm_cdf(-8.0) < 1e-14);
  CHECK(norm_cdf(-8.0) > 0.0);
  CHECK_THROWS_AS(norm_cdf(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(norm_cdf(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("norm_cdf matches density quadrature") {
  const double oracle_value = oracle::normal_cdf_quadrature(1.959964);
  CHECK(oracle_value == doctest::Approx(0.975).epsilon(1e-6));
  CHECK(std::abs(norm_cdf(1.959964) - 0.975) < 1e-6);
  CHECK(std::abs(norm_cdf(1.959964) - oracle_value) < 1e-9);
  // erfc-based oracle for the far tail: 0.5 * erfc(8 / sqrt 2)
  CHECK(norm_cdf(-8.0) == doctest::Approx(6.220960574271784e-16).epsilon(1e-10));
}

TEST_CASE("norm_cdf symmetry and monotonicity") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = dist(gen);
    CHECK(std::abs(norm_cdf(x) + norm_cdf(-x) - 1.0) <= 1e-15);
    const double y = x + std::abs(dist(gen)) * 1e-3;
    CHECK(norm_cdf(x) <= norm_cdf(y));
  }
}

TEST_CASE("black_scholes at-the-money with zero rate") {
  const PricingParams params{0.0, 0.2};
  const double call = black_scholes_price(contract(OptionKind::Call, 100, 1), {100}, params);
  const double put = black_scholes_price(contract(OptionKind::Put, 100, 1), {100}, params);
  CHECK(call == doctest::Approx(put).epsilon(1e-14));
  const double q = oracle::lognormal_option_quadrature(true, 100, 100, 0.0, 0.2, 1.0);
  CHECK(std::abs(q - 7.9656) < 1e-3);
  CHECK(std::abs(call - 7.9656) < 1e-3);
  CHECK(std::abs(call - q) < 1e-6);
}

TEST_CASE("black_scholes vanishing volatility") {
  const double price = black_scholes_price(contract(OptionKind::Call, 50, 1), {100}, {0.05, 1e-6});
  CHECK(std::abs(price - (100.0 - 50.0 * std::exp(-0.05))) < 1e-9);
}

TEST_CASE("black_scholes agrees with quadrature across moneyness") {
  for (double strike : {70.0, 95.0, 130.0}) {
    for (bool is_call : {true, false}) {
      const auto kind = is_call ? OptionKind::Call : OptionKind::Put;
      const double bs = black_scholes_price(contract(kind, strike, 0.75), {100}, {0.03, 0.35});
      const double q = oracle::lognormal_option_quadrature(is_call, 100, strike, 0.03, 0.35, 0.75);
      CHECK(std::abs(bs - q) < 1e-7);
    }
  }
}

TEST_CASE("black_scholes domain errors") {
  CHECK_THROWS_AS(black_scholes_price(contract(OptionKind::Call, 100, 1), {100}, {0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(black_scholes_price(contract(OptionKind::Call, 100, 1), {100}, {0.0, -0.1}), DomainError);
  CHECK_THROWS_AS(black_scholes_price(contract(OptionKind::Call, 100, 0), {100}, {0.0, 0.2}), DomainError);
}

TEST_CASE("put-call parity property") {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> spot(5.0, 500.0), moneyness(0.3, 3.0), rate(0.0, 0.1),
      vol(0.02, 1.5), expiry(0.01, 5.0);
  for (int i = 0; i < 5000; ++i) {
    const double s = spot(gen);
    const double k = s * moneyness(gen);
    const double t = expiry(gen);
    const PricingParams p{rate(gen), vol(gen)};
    const double call = black_scholes_price(contract(OptionKind::Call, k, t), {s}, p);
    const double put = black_scholes_price(contract(OptionKind::Put, k, t), {s}, p);
    CHECK(call >= 0.0);
    CHECK(put >= 0.0);
    CHECK(std::abs(call - put - (s - k * std::exp(-p.rate * t))) < 1e-9 * s);
  }
}
