#include "optbench/metrics/rapl.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "csv_util.hpp"
#include "optbench/errors.hpp"

namespace optbench {

namespace {

std::uint64_t read_counter_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  std::string text;
  if (!in || !std::getline(in, text)) throw SourceUnavailable("cannot read " + file.string());
  const std::string_view v = detail::trim_line(text);
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (v.empty() || ec != std::errc{} || end != v.data() + v.size()) {
    throw SourceUnavailable("unexpected contents in " + file.string());
  }
  return value;
}

}  // namespace

std::uint64_t rapl_read(const std::filesystem::path& domain) { return read_counter_file(domain / "energy_uj"); }

std::uint64_t rapl_max_range(const std::filesystem::path& domain) {
  return read_counter_file(domain / "max_energy_range_uj");
}

std::uint64_t energy_delta_uj(std::uint64_t a, std::uint64_t b, std::uint64_t max_range) {
  if (b >= a) return b - a;
  if (a > max_range) throw ArgumentError("counter reading exceeds its advertised range");
  return (max_range - a) + b;
}

CounterIntegrator::CounterIntegrator(std::uint64_t max_range, PowerLabel label)
    : max_range_(max_range), label_(label) {}

std::vector<PowerSample> CounterIntegrator::add(const CounterReading& reading) {
  std::vector<PowerSample> out;
  if (last_) {
    if (reading.timestamp_ns <= last_->timestamp_ns) throw ArgumentError("counter readings must advance in time");
    const double joules = static_cast<double>(energy_delta_uj(last_->energy_uj, reading.energy_uj, max_range_)) * 1e-6;
    const double watts = joules / (static_cast<double>(reading.timestamp_ns - last_->timestamp_ns) * 1e-9);
    if (!emitted_) {
      out.push_back({last_->timestamp_ns, watts, label_});
      emitted_ = true;
    }
    out.push_back({reading.timestamp_ns, watts, label_});
  }
  last_ = reading;
  return out;
}

std::vector<PowerSample> power_series_from_counters(std::span<const CounterReading> readings,
                                                    std::uint64_t max_range, PowerLabel label) {
  CounterIntegrator integrator(max_range, label);
  std::vector<PowerSample> out;
  for (const auto& r : readings) {
    const auto samples = integrator.add(r);
    out.insert(out.end(), samples.begin(), samples.end());
  }
  return out;
}

void write_counter_log(std::ostream& out, std::span<const CounterReading> readings) {
  out << "timestamp_ns,energy_uj\n";
  for (const auto& r : readings) out << r.timestamp_ns << ',' << r.energy_uj << '\n';
}

std::vector<CounterReading> read_counter_log(std::istream& in) {
  std::vector<CounterReading> out;
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string_view line = detail::trim_line(raw);
    if (line.empty() || line.front() == '#' || line == "timestamp_ns,energy_uj") continue;
    const auto [ts, e] = detail::split_pair(line, line_number);
    out.push_back({detail::parse_field<std::int64_t>(ts, line_number, "timestamp"),
                   detail::parse_field<std::uint64_t>(e, line_number, "energy")});
  }
  return out;
}

RaplSource::RaplSource(std::filesystem::path domain)
    : domain_(std::move(domain)), max_range_(rapl_max_range(domain_)), integrator_(max_range_) {
  rapl_read(domain_);
}

std::vector<PowerSample> RaplSource::poll(std::int64_t now_ns) {
  const CounterReading reading{now_ns, rapl_read(domain_)};
  readings_.push_back(reading);
  return integrator_.add(reading);
}

}  // namespace optbench
