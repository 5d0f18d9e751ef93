#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "optbench/errors.hpp"
#include "optbench/pricing/black_scholes.hpp"
#include "optbench/pricing/monte_carlo.hpp"

using namespace optbench;

namespace {

OptionContract contract(OptionKind kind, double strike, double expiry) {
  return OptionContract{"c", kind, strike, expiry};
}

double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Brute-force location of the payoff sign change: smallest grid x at which the
// call payoff S e^{(r-σ²/2)T + σ√T x} - K turns positive.
double payoff_sign_flip(double s, double k, double r, double vol, double t) {
  const double step = 1e-6;
  double lo = -12.0;
  for (double x = -12.0; x <= 12.0; x += 1e-3) {
    if (s * std::exp((r - 0.5 * vol * vol) * t + vol * std::sqrt(t) * x) - k > 0) break;
    lo = x;
  }
  for (double x = lo; x <= lo + 2e-3; x += step) {
    if (s * std::exp((r - 0.5 * vol * vol) * t + vol * std::sqrt(t) * x) - k > 0) return x;
  }
  return NAN;
}

}  // namespace

TEST_CASE("threshold is zero when the strike equals the drifted spot") {
  const PricingParams p{0.03, 0.25};
  const double t = 0.8;
  const double strike = 100.0 * std::exp((p.rate - 0.5 * p.volatility * p.volatility) * t);
  CHECK(std::abs(mc_threshold(contract(OptionKind::Call, strike, t), {100}, p)) < 1e-12);
}

TEST_CASE("threshold matches the brute-force payoff sign change") {
  const PricingParams p{0.01, 0.2};
  const double otm = mc_threshold(contract(OptionKind::Call, 110, 1), {100}, p);
  CHECK(std::abs(otm - payoff_sign_flip(100, 110, 0.01, 0.2, 1)) < 2e-6);
  CHECK(otm > 0.0);

  const double itm = mc_threshold(contract(OptionKind::Call, 90, 1), {100}, p);
  CHECK(std::abs(itm - payoff_sign_flip(100, 90, 0.01, 0.2, 1)) < 2e-6);
  CHECK(itm < 0.0);

  CHECK_THROWS_AS(mc_threshold(contract(OptionKind::Call, 90, 1), {100}, {0.01, 0.0}), DomainError);
}

TEST_CASE("mc converges on the at-the-money call") {
  McConfig cfg;
  cfg.draws = 1'000'000;
  cfg.seed = 5489;
  const auto c = contract(OptionKind::Call, 100, 1);
  const PricingParams p{0.0, 0.2};
  const double mc = mc_price(c, {100}, p, cfg);
  const double bs = black_scholes_price(c, {100}, p);
  CHECK(relative(mc, bs) < 1e-3);
}

TEST_CASE("mc in the vanishing-volatility limit") {
  McConfig cfg;
  cfg.draws = 10'000;
  const auto c = contract(OptionKind::Call, 50, 1);
  const PricingParams p{0.0, 0.01};
  const double mc = mc_price(c, {200}, p, cfg);
  CHECK(std::abs(mc - 150.0) < 0.5);
  CHECK(std::abs(mc - black_scholes_price(c, {200}, p)) < 0.5);
}

TEST_CASE("mc is bitwise deterministic for a fixed seed") {
  McConfig cfg;
  cfg.draws = 100'001;
  cfg.seed = 77;
  const auto c = contract(OptionKind::Put, 105, 0.5);
  const PricingParams p{0.02, 0.3};
  const double a = mc_price(c, {100}, p, cfg);
  const double b = mc_price(c, {100}, p, cfg);
  CHECK(std::memcmp(&a, &b, sizeof a) == 0);
  cfg.seed = 78;
  CHECK(mc_price(c, {100}, p, cfg) != a);
}

TEST_CASE("screening equivalence property") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> moneyness(0.6, 1.5), rate(0.0, 0.08), vol(0.05, 0.8), expiry(0.05, 2.0);
  std::uniform_int_distribution<std::uint64_t> draws(1, 100'000), seed;
  for (int i = 0; i < 40; ++i) {
    const auto kind = i % 2 ? OptionKind::Put : OptionKind::Call;
    const auto c = contract(kind, 100.0 * moneyness(gen), expiry(gen));
    const PricingParams p{rate(gen), vol(gen)};
    McConfig cfg;
    cfg.draws = draws(gen);
    cfg.seed = seed(gen);
    cfg.precision = i % 3 == 0 ? Precision::Single : Precision::Double;
    cfg.lanes.lane_width = i % 4 == 0 ? 1 : 8;
    cfg.screening = true;
    const double screened = mc_price(c, {100}, p, cfg);
    cfg.screening = false;
    const double plain = mc_price(c, {100}, p, cfg);
    if (plain == 0.0) {
      CHECK(screened < 1e-12);
    } else {
      CHECK(relative(screened, plain) < 1e-6);
    }
  }
}

TEST_CASE("single precision exponential stays close to double") {
  McConfig cfg;
  cfg.draws = 200'000;
  const auto c = contract(OptionKind::Call, 95, 1);
  const PricingParams p{0.05, 0.2};
  const double d = mc_price(c, {100}, p, cfg);
  cfg.precision = Precision::Single;
  cfg.lanes.lane_width = 4;
  const double f = mc_price(c, {100}, p, cfg);
  CHECK(relative(f, d) < 1e-5);
}

TEST_CASE("mc argument and domain errors") {
  McConfig cfg;
  cfg.draws = 0;
  CHECK_THROWS_AS(mc_price(contract(OptionKind::Call, 100, 1), {100}, {0.0, 0.2}, cfg), ArgumentError);
  cfg.draws = 10;
  CHECK_THROWS_AS(mc_price(contract(OptionKind::Call, 100, 1), {100}, {0.0, 0.0}, cfg), DomainError);
  cfg.lanes.lane_width = 3;
  CHECK_THROWS_AS(mc_price(contract(OptionKind::Call, 100, 1), {100}, {0.0, 0.2}, cfg), ArgumentError);
}

TEST_CASE("mc observes cancellation at checkpoints") {
  McConfig cfg;
  cfg.draws = 10 * kMcCheckpointDraws;
  int polls = 0;
  auto cancel_after_two = [&] { return ++polls > 2; };
  const auto r = mc_price(contract(OptionKind::Call, 100, 1), {100}, {0.0, 0.2}, cfg, cancel_after_two);
  CHECK_FALSE(r.has_value());
  CHECK(polls == 3);

  auto never = [] { return false; };
  const auto done = mc_price(contract(OptionKind::Call, 100, 1), {100}, {0.0, 0.2}, cfg, never);
  REQUIRE(done.has_value());
  CHECK(*done == mc_price(contract(OptionKind::Call, 100, 1), {100}, {0.0, 0.2}, cfg));
}
