#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace optbench {

/// Where the power was measured.
enum class PowerLabel { PreVrm, PrePsu, Model };

std::string_view to_string(PowerLabel label);
PowerLabel parse_power_label(std::string_view text);

struct PowerSample {
  std::int64_t timestamp_ns = 0;  // monotonic, session clock
  double watts = 0.0;
  PowerLabel source = PowerLabel::Model;

  friend bool operator==(const PowerSample&, const PowerSample&) = default;
};

/// A pollable power source. poll() takes one reading at `now_ns` and returns
/// the samples that reading completes (a counter needs two readings before
/// the first sample exists).
class PowerSource {
public:
  virtual ~PowerSource() = default;
  virtual PowerLabel label() const = 0;
  virtual std::vector<PowerSample> poll(std::int64_t now_ns) = 0;
};

/// Fixed wattage, for modelled platforms and tests.
class ConstantSource : public PowerSource {
public:
  explicit ConstantSource(double watts);
  PowerLabel label() const override { return PowerLabel::Model; }
  std::vector<PowerSample> poll(std::int64_t now_ns) override;

private:
  double watts_;
};

/// Replays an external meter log (`timestamp_ns,watts`). The log's first
/// timestamp is aligned to the first poll; values are linearly interpolated
/// and held flat past either end.
class TraceSource : public PowerSource {
public:
  explicit TraceSource(std::vector<PowerSample> trace, PowerLabel label = PowerLabel::PrePsu);
  PowerLabel label() const override { return label_; }
  std::vector<PowerSample> poll(std::int64_t now_ns) override;

private:
  std::vector<PowerSample> trace_;
  PowerLabel label_;
  bool aligned_ = false;
  std::int64_t offset_ = 0;
};

std::vector<PowerSample> read_power_trace(std::istream& in, PowerLabel label = PowerLabel::PrePsu);
std::vector<PowerSample> read_power_trace(const std::filesystem::path& path, PowerLabel label = PowerLabel::PrePsu);
void write_power_trace(std::ostream& out, std::span<const PowerSample> samples);

/// Value of the piecewise-linear series at t, clamped to the sample span.
double power_at(std::span<const PowerSample> samples, std::int64_t t_ns);

/// Time-weighted trapezoidal mean over [start, end], clamped to the span
/// covered by the samples. Needs at least two time-ordered samples and a
/// window that overlaps them with positive length; throws ArgumentError
/// otherwise.
double mean_power(std::span<const PowerSample> samples, std::int64_t start_ns, std::int64_t end_ns);

/// Trapezoidal energy in joules over the same clamped window.
double energy_joules(std::span<const PowerSample> samples, std::int64_t start_ns, std::int64_t end_ns);

}  // namespace optbench
