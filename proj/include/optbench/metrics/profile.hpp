#pragma once

#include <optional>
#include <span>
#include <vector>

#include "optbench/feed/trace.hpp"

namespace optbench {

inline constexpr double kProfileBinSeconds = 0.25;

/// One 0.25 s bin of the inter-arrival gap histogram.
struct ProfileBin {
  double lo = 0.0;  // seconds, inclusive
  double hi = 0.0;  // seconds, exclusive
  std::size_t gaps = 0;
  std::size_t successes = 0;
  std::size_t cumulative_gaps = 0;
  std::size_t cumulative_successes = 0;
  /// cumulative_successes / cumulative_gaps; absent while no gap has been seen.
  std::optional<double> cumulative_fraction;

  friend bool operator==(const ProfileBin&, const ProfileBin&) = default;
};

/// A tick update succeeds iff the gap to the next arrival is at least
/// `pricing_span`. Bins run from 0 up to the bin holding the longest gap.
/// Throws ArgumentError for fewer than two ticks or a nonpositive span.
std::vector<ProfileBin> all_or_nothing_profile(std::span<const double> gaps_s, double pricing_span_s);
std::vector<ProfileBin> all_or_nothing_profile(const TickTrace& trace, double pricing_span_s);

std::vector<double> inter_arrival_gaps(const TickTrace& trace);

/// Overall fraction of successful updates (last bin's cumulative fraction).
double all_or_nothing_success(std::span<const ProfileBin> profile);

}  // namespace optbench
