#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "optbench/metrics/power.hpp"

namespace optbench {

/// Reads `<domain>/energy_uj`. Throws SourceUnavailable when missing or
/// unreadable.
std::uint64_t rapl_read(const std::filesystem::path& domain);
std::uint64_t rapl_max_range(const std::filesystem::path& domain);

/// Counter increase from a to b, allowing one wrap past max_range.
std::uint64_t energy_delta_uj(std::uint64_t a, std::uint64_t b, std::uint64_t max_range);

struct CounterReading {
  std::int64_t timestamp_ns = 0;
  std::uint64_t energy_uj = 0;

  friend bool operator==(const CounterReading&, const CounterReading&) = default;
};

/// Turns successive counter readings into power samples. The first interval's
/// mean power is also reported at the first reading's timestamp.
class CounterIntegrator {
public:
  explicit CounterIntegrator(std::uint64_t max_range, PowerLabel label = PowerLabel::PreVrm);
  std::vector<PowerSample> add(const CounterReading& reading);

private:
  std::uint64_t max_range_;
  PowerLabel label_;
  std::optional<CounterReading> last_;
  bool emitted_ = false;
};

std::vector<PowerSample> power_series_from_counters(std::span<const CounterReading> readings,
                                                    std::uint64_t max_range,
                                                    PowerLabel label = PowerLabel::PreVrm);

/// Counter log CSV: `timestamp_ns,energy_uj` rows.
void write_counter_log(std::ostream& out, std::span<const CounterReading> readings);
std::vector<CounterReading> read_counter_log(std::istream& in);

/// Live powercap domain (e.g. /sys/class/powercap/intel-rapl:0).
class RaplSource : public PowerSource {
public:
  explicit RaplSource(std::filesystem::path domain);
  PowerLabel label() const override { return PowerLabel::PreVrm; }
  std::vector<PowerSample> poll(std::int64_t now_ns) override;

  std::uint64_t max_range() const { return max_range_; }
  const std::vector<CounterReading>& readings() const { return readings_; }

private:
  std::filesystem::path domain_;
  std::uint64_t max_range_;
  CounterIntegrator integrator_;
  std::vector<CounterReading> readings_;
};

inline constexpr const char* kDefaultRaplDomain = "/sys/class/powercap/intel-rapl:0";

}  // namespace optbench
