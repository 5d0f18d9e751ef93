#include "optbench/metrics/power.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "csv_util.hpp"
#include "optbench/errors.hpp"

namespace optbench {

std::string_view to_string(PowerLabel label) {
  switch (label) {
    case PowerLabel::PreVrm: return "PRE-VRM";
    case PowerLabel::PrePsu: return "PRE-PSU";
    case PowerLabel::Model: return "MODEL";
  }
  return "unknown";
}

PowerLabel parse_power_label(std::string_view text) {
  if (text == "PRE-VRM") return PowerLabel::PreVrm;
  if (text == "PRE-PSU") return PowerLabel::PrePsu;
  if (text == "MODEL") return PowerLabel::Model;
  throw ArgumentError("power label must be PRE-VRM, PRE-PSU or MODEL");
}

ConstantSource::ConstantSource(double watts) : watts_(watts) {
  if (!(watts >= 0.0) || !std::isfinite(watts)) throw ArgumentError("constant power must be a finite value >= 0");
}

std::vector<PowerSample> ConstantSource::poll(std::int64_t now_ns) {
  return {PowerSample{now_ns, watts_, PowerLabel::Model}};
}

TraceSource::TraceSource(std::vector<PowerSample> trace, PowerLabel label) : trace_(std::move(trace)), label_(label) {
  if (trace_.empty()) throw ArgumentError("power trace is empty");
}

std::vector<PowerSample> TraceSource::poll(std::int64_t now_ns) {
  if (!aligned_) {
    offset_ = trace_.front().timestamp_ns - now_ns;
    aligned_ = true;
  }
  return {PowerSample{now_ns, power_at(trace_, now_ns + offset_), label_}};
}

std::vector<PowerSample> read_power_trace(std::istream& in, PowerLabel label) {
  std::vector<PowerSample> out;
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string_view line = detail::trim_line(raw);
    if (line.empty() || line.front() == '#' || line == "timestamp_ns,watts") continue;
    const auto [ts, w] = detail::split_pair(line, line_number);
    PowerSample s;
    s.timestamp_ns = detail::parse_field<std::int64_t>(ts, line_number, "timestamp");
    s.watts = detail::parse_field<double>(w, line_number, "wattage");
    s.source = label;
    if (!(s.watts >= 0.0) || !std::isfinite(s.watts)) throw ParseError(line_number, "wattage must be >= 0");
    if (!out.empty() && s.timestamp_ns < out.back().timestamp_ns) {
      throw ParseError(line_number, "timestamps must be nondecreasing");
    }
    out.push_back(s);
  }
  return out;
}

std::vector<PowerSample> read_power_trace(const std::filesystem::path& path, PowerLabel label) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  return read_power_trace(in, label);
}

void write_power_trace(std::ostream& out, std::span<const PowerSample> samples) {
  out << "timestamp_ns,watts\n";
  char buf[32];
  for (const auto& s : samples) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, s.watts);
    out << s.timestamp_ns << ',' << std::string_view(buf, static_cast<std::size_t>(end - buf)) << '\n';
  }
}

namespace {

void check_series(std::span<const PowerSample> samples) {
  if (samples.size() < 2) throw ArgumentError("need at least two power samples");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].timestamp_ns < samples[i - 1].timestamp_ns) throw ArgumentError("power samples out of order");
  }
}

double lerp(const PowerSample& a, const PowerSample& b, std::int64_t t) {
  if (b.timestamp_ns == a.timestamp_ns) return b.watts;
  const double f = static_cast<double>(t - a.timestamp_ns) / static_cast<double>(b.timestamp_ns - a.timestamp_ns);
  return a.watts + (b.watts - a.watts) * f;
}

// Integral in W·ns over the clamped window; also returns the window length.
std::pair<double, std::int64_t> integrate(std::span<const PowerSample> samples, std::int64_t start,
                                          std::int64_t end) {
  check_series(samples);
  if (end < start) throw ArgumentError("power window end precedes start");
  const std::int64_t lo = std::max(start, samples.front().timestamp_ns);
  const std::int64_t hi = std::min(end, samples.back().timestamp_ns);
  if (hi <= lo) throw ArgumentError("power samples do not overlap the window");
  double acc = 0.0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const auto& a = samples[i - 1];
    const auto& b = samples[i];
    const std::int64_t s = std::max(lo, a.timestamp_ns);
    const std::int64_t e = std::min(hi, b.timestamp_ns);
    if (e <= s) continue;
    acc += 0.5 * (lerp(a, b, s) + lerp(a, b, e)) * static_cast<double>(e - s);
  }
  return {acc, hi - lo};
}

}  // namespace

double power_at(std::span<const PowerSample> samples, std::int64_t t) {
  if (samples.empty()) throw ArgumentError("no power samples");
  if (t <= samples.front().timestamp_ns) return samples.front().watts;
  if (t >= samples.back().timestamp_ns) return samples.back().watts;
  const auto it = std::upper_bound(samples.begin(), samples.end(), t,
                                   [](std::int64_t v, const PowerSample& s) { return v < s.timestamp_ns; });
  return lerp(*(it - 1), *it, t);
}

double mean_power(std::span<const PowerSample> samples, std::int64_t start_ns, std::int64_t end_ns) {
  const auto [area, length] = integrate(samples, start_ns, end_ns);
  return area / static_cast<double>(length);
}

double energy_joules(std::span<const PowerSample> samples, std::int64_t start_ns, std::int64_t end_ns) {
  return integrate(samples, start_ns, end_ns).first * 1e-9;
}

}  // namespace optbench
