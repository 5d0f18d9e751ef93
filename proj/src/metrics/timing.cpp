#include "optbench/metrics/timing.hpp"

#include <cmath>

#include "optbench/errors.hpp"

namespace optbench {

std::optional<double> time_per_option(const SessionLog& log) {
  const std::size_t successes = count_statuses(log).success;
  if (successes == 0) return std::nullopt;
  double spans = 0.0;
  for (const auto& t : log.ticks) spans += worst_core_elapsed(log, t.seq);
  return spans / static_cast<double>(successes);
}

double joules_per_option(double mean_power, double s_per_opt) {
  if (!(mean_power >= 0.0) || !(s_per_opt >= 0.0)) throw ArgumentError("power and time must be >= 0");
  return mean_power * s_per_opt;
}

std::optional<double> qos(const SessionLog& log) {
  const StatusCounts c = count_statuses(log);
  if (c.total() == 0) return std::nullopt;
  return static_cast<double>(c.success) / static_cast<double>(c.total());
}

}  // namespace optbench
