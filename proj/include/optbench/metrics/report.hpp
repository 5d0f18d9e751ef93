#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "optbench/metrics/power.hpp"
#include "optbench/metrics/profile.hpp"
#include "optbench/service/session.hpp"

namespace optbench {

struct TickSpan {
  std::uint64_t seq = 0;
  std::int64_t arrival_ns = 0;
  double worst_core_s = 0.0;
  std::size_t successes = 0;
  std::size_t requested = 0;

  friend bool operator==(const TickSpan&, const TickSpan&) = default;
};

struct SessionReport {
  // Run metadata
  std::string platform;
  std::string model;
  std::uint64_t n = 0;
  std::string variant;
  std::string precision;
  std::string governor;
  std::size_t workers = 1;
  std::string pacing;
  std::string scaleout = "none";
  std::size_t nodes = 1;
  std::string power_source;

  // Metrics
  double mean_power = 0.0;            // W
  std::optional<double> s_per_opt;    // s
  std::optional<double> j_per_opt;    // J
  std::optional<double> qos;          // [0, 1]
  double duration_s = 0.0;
  double energy_j = 0.0;              // mean_power × duration
  std::size_t ticks = 0;
  std::size_t success = 0;
  std::size_t abandoned = 0;
  std::size_t errored = 0;
  std::optional<std::size_t> feed_gaps;  // multicast sequence gaps, live runs only
  std::optional<double> max_rel_error;  // vs Black-Scholes, successes priced ≥ one cent
  double profile_span_s = 0.0;
  std::vector<ProfileBin> profile;
  std::vector<TickSpan> tick_spans;

  friend bool operator==(const SessionReport&, const SessionReport&) = default;
};

struct ReportOptions {
  /// Book and parameters for the Black-Scholes accuracy column; skipped when null.
  const ContractBook* book = nullptr;
  PricingParams params{0.02, 0.25};
  /// Span for the all-or-nothing profile; defaults to s_per_opt × book size.
  std::optional<double> profile_span_s;
  std::string power_source = "constant";
};

/// Mean power is taken over [0, log.end_ns] of the session clock.
SessionReport build_report(const SessionLog& log, std::span<const PowerSample> samples,
                           const ReportOptions& options = {});

enum class ScaleoutMode { Split, Replicate };
ScaleoutMode parse_scaleout(std::string_view text);
std::string_view to_string(ScaleoutMode mode);

/// Treats per-node reports as one platform: powers and energies add; each
/// tick's span is the max over nodes. Successes add under Split (each node
/// priced its own slice) and take the per-tick max under Replicate (nodes
/// priced the same contracts).
SessionReport merge_reports(std::span<const SessionReport> nodes, ScaleoutMode mode);

std::string report_to_json(const SessionReport& report);
SessionReport report_from_json(std::string_view text);
void write_report(const std::filesystem::path& path, const SessionReport& report);
SessionReport read_report(const std::filesystem::path& path);

std::string report_csv_header();
std::string report_csv_row(const SessionReport& report);

/// Shortest-round-trip decimal, "" for absent values.
std::string format_number(double value);
std::string format_number(const std::optional<double>& value);

}  // namespace optbench
