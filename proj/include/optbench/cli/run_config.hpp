#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "optbench/metrics/power.hpp"
#include "optbench/metrics/rapl.hpp"
#include "optbench/service/book.hpp"
#include "optbench/service/session.hpp"

namespace optbench {

enum class PowerKind { Rapl, Trace, Constant };

PowerKind parse_power_kind(std::string_view text);
std::string_view to_string(PowerKind kind);

/// Everything that identifies one benchmark run.
struct RunConfig {
  ModelKind model = ModelKind::MonteCarlo;
  std::optional<std::uint64_t> n;  // MC draws or BT steps; model default when unset
  std::string variant = "NOVECT";
  Precision precision = Precision::Double;
  std::size_t workers = 1;
  std::string governor = "unknown";
  std::string platform = "1x1x1";
  PowerKind power = PowerKind::Rapl;
  double watts = 0.0;  // constant source
  std::string power_trace;
  std::string rapl_domain = kDefaultRaplDomain;
  std::uint64_t seed = 5489;
  double rate = 0.02;
  double volatility = 0.25;
  bool screening = true;

  std::uint64_t resolved_n() const;
  /// Throws ArgumentError when an invariant fails.
  void validate() const;
  ModelConfig model_config() const;
  SessionMeta meta() const;
};

/// Opens the configured power source. Throws SourceUnavailable for a missing
/// RAPL domain and IoError/ParseError for a bad trace file.
std::unique_ptr<PowerSource> open_power_source(const RunConfig& cfg);

/// "lo:hi:step" strike grid.
void apply_strike_grid(BookSpec& spec, std::string_view grid);
/// Comma-separated expiries in years.
std::vector<double> parse_expiries(std::string_view text);

/// Expands every `--config <file>` (or `--config=<file>`) into `--key=value`
/// arguments for keys not already given on the command line. The file holds
/// plain `key=value` lines; `#` starts a comment.
std::vector<std::string> expand_config_files(const std::vector<std::string>& args);

}  // namespace optbench
