#pragma once

#include <optional>

#include "optbench/service/session.hpp"

namespace optbench {

/// Σ_ticks worst-core span / Σ_ticks successes. Absent with zero successes.
std::optional<double> time_per_option(const SessionLog& log);

/// mean_power × s_per_opt. Throws ArgumentError on negative inputs.
double joules_per_option(double mean_power, double s_per_opt);

/// Success / all records. Absent for an empty log.
std::optional<double> qos(const SessionLog& log);

}  // namespace optbench
