#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "optbench/feed/trace.hpp"

namespace optbench {

enum class ArrivalModel { Fixed, Poisson };

ArrivalModel parse_arrival_model(std::string_view text);

/// Controllable stand-in for a captured exchange session.
struct SyntheticTraceSpec {
  ArrivalModel arrivals = ArrivalModel::Fixed;
  double rate_hz = 1.0;  // mean ticks per second
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::string symbol = "FB";
  double start_price = 67.25;
  double tick_volatility = 1e-3;  // stdev of the per-tick log return
};

/// Deterministic for a fixed spec. The first tick is at t = 0; fixed
/// arrivals are spaced exactly 1/rate apart, Poisson arrivals use
/// exponential gaps with mean 1/rate.
TickTrace generate_trace(const SyntheticTraceSpec& spec, std::string session_start = "1970-01-01T00:00:00Z");

}  // namespace optbench
