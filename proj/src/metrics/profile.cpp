#include "optbench/metrics/profile.hpp"

#include <cmath>

#include "optbench/errors.hpp"

namespace optbench {

std::vector<double> inter_arrival_gaps(const TickTrace& trace) {
  std::vector<double> gaps;
  for (std::size_t i = 1; i < trace.ticks.size(); ++i) {
    gaps.push_back(static_cast<double>(trace.ticks[i].timestamp_ns - trace.ticks[i - 1].timestamp_ns) * 1e-9);
  }
  return gaps;
}

std::vector<ProfileBin> all_or_nothing_profile(std::span<const double> gaps, double span) {
  if (gaps.empty()) throw ArgumentError("profile needs at least two ticks");
  if (!(span > 0.0)) throw ArgumentError("pricing span must be positive");
  std::size_t n_bins = 0;
  for (double g : gaps) {
    if (!(g >= 0.0) || !std::isfinite(g)) throw ArgumentError("gaps must be finite and nonnegative");
    n_bins = std::max(n_bins, static_cast<std::size_t>(std::floor(g / kProfileBinSeconds)) + 1);
  }
  std::vector<ProfileBin> bins(n_bins);
  for (std::size_t b = 0; b < n_bins; ++b) {
    bins[b].lo = static_cast<double>(b) * kProfileBinSeconds;
    bins[b].hi = static_cast<double>(b + 1) * kProfileBinSeconds;
  }
  for (double g : gaps) {
    auto& bin = bins[static_cast<std::size_t>(std::floor(g / kProfileBinSeconds))];
    ++bin.gaps;
    if (g >= span) ++bin.successes;
  }
  std::size_t gaps_so_far = 0, ok_so_far = 0;
  for (auto& bin : bins) {
    gaps_so_far += bin.gaps;
    ok_so_far += bin.successes;
    bin.cumulative_gaps = gaps_so_far;
    bin.cumulative_successes = ok_so_far;
    if (gaps_so_far) bin.cumulative_fraction = static_cast<double>(ok_so_far) / static_cast<double>(gaps_so_far);
  }
  return bins;
}

std::vector<ProfileBin> all_or_nothing_profile(const TickTrace& trace, double span) {
  const auto gaps = inter_arrival_gaps(trace);
  return all_or_nothing_profile(gaps, span);
}

double all_or_nothing_success(std::span<const ProfileBin> profile) {
  if (profile.empty() || !profile.back().cumulative_fraction) return 0.0;
  return *profile.back().cumulative_fraction;
}

}  // namespace optbench
