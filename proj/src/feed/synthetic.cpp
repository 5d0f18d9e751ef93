#include "optbench/feed/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "optbench/errors.hpp"

namespace optbench {

ArrivalModel parse_arrival_model(std::string_view text) {
  if (text == "fixed") return ArrivalModel::Fixed;
  if (text == "poisson") return ArrivalModel::Poisson;
  throw ArgumentError("arrival model must be 'fixed' or 'poisson'");
}

TickTrace generate_trace(const SyntheticTraceSpec& spec, std::string session_start) {
  if (!(spec.rate_hz > 0.0) || !std::isfinite(spec.rate_hz)) throw ArgumentError("rate must be positive");
  if (spec.count == 0) throw ArgumentError("count must be at least 1");
  if (!(spec.start_price > 0.0)) throw ArgumentError("start price must be positive");
  validate_symbol(spec.symbol);

  std::mt19937_64 gen(spec.seed);
  std::exponential_distribution<double> gap(spec.rate_hz);
  std::normal_distribution<double> log_return(0.0, spec.tick_volatility);

  TickTrace trace;
  trace.header.session_start = std::move(session_start);
  trace.ticks.reserve(spec.count);
  double t_seconds = 0.0;
  double price = spec.start_price;
  for (std::size_t i = 0; i < spec.count; ++i) {
    if (i > 0) {
      if (spec.arrivals == ArrivalModel::Fixed) {
        t_seconds = static_cast<double>(i) / spec.rate_hz;
      } else {
        t_seconds += gap(gen);
      }
      price *= std::exp(log_return(gen));
    }
    MarketTick tick;
    tick.seq = i;
    tick.timestamp_ns = std::llround(t_seconds * 1e9);
    tick.symbol = spec.symbol;
    // cent grid, never below one cent
    tick.price = std::max(0.01, std::round(price * 100.0) / 100.0);
    trace.ticks.push_back(std::move(tick));
  }
  trace.refresh_symbols();
  return trace;
}

}  // namespace optbench
