#include "optbench/metrics/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "optbench/errors.hpp"
#include "optbench/metrics/timing.hpp"
#include "optbench/pricing/black_scholes.hpp"

namespace optbench {

using nlohmann::json;

std::string format_number(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string format_number(const std::optional<double>& value) { return value ? format_number(*value) : ""; }

namespace {

std::vector<ProfileBin> profile_from_spans(std::span<const TickSpan> spans, double span_s) {
  if (spans.size() < 2 || !(span_s > 0.0)) return {};
  std::vector<double> gaps;
  for (std::size_t i = 1; i < spans.size(); ++i) {
    gaps.push_back(static_cast<double>(spans[i].arrival_ns - spans[i - 1].arrival_ns) * 1e-9);
  }
  return all_or_nothing_profile(gaps, span_s);
}

void finish_metrics(SessionReport& r) {
  std::size_t successes = 0, requested = 0;
  double spans = 0.0;
  for (const auto& t : r.tick_spans) {
    successes += t.successes;
    requested += t.requested;
    spans += t.worst_core_s;
  }
  r.ticks = r.tick_spans.size();
  r.s_per_opt = successes ? std::optional<double>(spans / static_cast<double>(successes)) : std::nullopt;
  r.j_per_opt = r.s_per_opt ? std::optional<double>(joules_per_option(r.mean_power, *r.s_per_opt)) : std::nullopt;
  r.qos = requested ? std::optional<double>(static_cast<double>(successes) / static_cast<double>(requested))
                    : std::nullopt;
}

}  // namespace

SessionReport build_report(const SessionLog& log, std::span<const PowerSample> samples,
                           const ReportOptions& options) {
  SessionReport r;
  r.platform = log.meta.platform;
  r.model = log.meta.model;
  r.n = log.meta.n;
  r.variant = log.meta.variant;
  r.precision = log.meta.precision;
  r.governor = log.meta.governor;
  r.workers = log.meta.workers;
  r.pacing = log.meta.pacing;
  r.scaleout = log.meta.scaleout;
  r.power_source = options.power_source;

  if (samples.empty()) throw ArgumentError("no power samples");
  r.mean_power = log.end_ns > 0 ? mean_power(samples, 0, log.end_ns) : power_at(samples, 0);
  r.duration_s = static_cast<double>(log.end_ns) * 1e-9;
  r.energy_j = r.mean_power * r.duration_s;

  std::map<std::uint64_t, TickSpan*> by_seq;
  r.tick_spans.reserve(log.ticks.size());
  for (const auto& t : log.ticks) {
    r.tick_spans.push_back({t.seq, t.arrival_ns, worst_core_elapsed(log, t.seq), 0, 0});
  }
  for (auto& t : r.tick_spans) by_seq[t.seq] = &t;
  for (const auto& rec : log.records) {
    const auto it = by_seq.find(rec.tick_seq);
    if (it == by_seq.end()) continue;
    ++it->second->requested;
    if (rec.status == PricingStatus::Success) ++it->second->successes;
  }
  const StatusCounts counts = count_statuses(log);
  r.success = counts.success;
  r.abandoned = counts.abandoned;
  r.errored = counts.errored;
  finish_metrics(r);

  if (options.profile_span_s) {
    r.profile_span_s = *options.profile_span_s;
  } else if (r.s_per_opt && !r.tick_spans.empty()) {
    r.profile_span_s = *r.s_per_opt * static_cast<double>(r.tick_spans.front().requested);
  }
  r.profile = profile_from_spans(r.tick_spans, r.profile_span_s);

  if (options.book) {
    std::optional<double> worst;
    for (const auto& rec : log.records) {
      if (rec.status != PricingStatus::Success || rec.contract_index >= options.book->size()) continue;
      const TickArrival* tick = log.find_tick(rec.tick_seq);
      if (!tick) continue;
      const double bs =
          black_scholes_price(options.book->contracts[rec.contract_index], SpotPrice{tick->spot}, options.params);
      if (bs < 0.01) continue;
      const double rel = std::abs(*rec.price - bs) / bs;
      worst = std::max(worst.value_or(0.0), rel);
    }
    r.max_rel_error = worst;
  }
  return r;
}

ScaleoutMode parse_scaleout(std::string_view text) {
  if (text == "split") return ScaleoutMode::Split;
  if (text == "replicate") return ScaleoutMode::Replicate;
  throw ArgumentError("scaleout must be split or replicate");
}

std::string_view to_string(ScaleoutMode mode) { return mode == ScaleoutMode::Split ? "split" : "replicate"; }

SessionReport merge_reports(std::span<const SessionReport> nodes, ScaleoutMode mode) {
  if (nodes.empty()) throw ArgumentError("nothing to merge");
  SessionReport m = nodes.front();
  m.scaleout = std::string(to_string(mode));
  m.nodes = 0;
  m.mean_power = 0.0;
  m.energy_j = 0.0;
  m.duration_s = 0.0;
  m.success = m.abandoned = m.errored = 0;
  m.max_rel_error.reset();
  m.feed_gaps.reset();
  m.workers = 0;

  std::map<std::uint64_t, TickSpan> ticks;
  for (const auto& node : nodes) {
    m.nodes += node.nodes;
    m.workers += node.workers;
    m.mean_power += node.mean_power;
    m.energy_j += node.energy_j;
    m.duration_s = std::max(m.duration_s, node.duration_s);
    m.errored += node.errored;
    if (node.feed_gaps) m.feed_gaps = m.feed_gaps.value_or(0) + *node.feed_gaps;
    if (node.max_rel_error) m.max_rel_error = std::max(m.max_rel_error.value_or(0.0), *node.max_rel_error);
    for (const auto& t : node.tick_spans) {
      auto [it, fresh] = ticks.try_emplace(t.seq, t);
      if (fresh) continue;
      TickSpan& acc = it->second;
      acc.arrival_ns = std::min(acc.arrival_ns, t.arrival_ns);
      acc.worst_core_s = std::max(acc.worst_core_s, t.worst_core_s);
      if (mode == ScaleoutMode::Split) {
        acc.successes += t.successes;
        acc.requested += t.requested;
      } else {
        acc.successes = std::max(acc.successes, t.successes);
        acc.requested = std::max(acc.requested, t.requested);
      }
    }
  }
  m.tick_spans.clear();
  std::size_t requested = 0;
  for (const auto& [seq, t] : ticks) {
    m.tick_spans.push_back(t);
    m.success += t.successes;
    requested += t.requested;
  }
  if (mode == ScaleoutMode::Replicate) m.errored = std::min(m.errored, requested - m.success);
  m.abandoned = requested - m.success - m.errored;
  finish_metrics(m);
  if (m.s_per_opt && !m.tick_spans.empty()) {
    m.profile_span_s = *m.s_per_opt * static_cast<double>(m.tick_spans.front().requested);
  }
  m.profile = profile_from_spans(m.tick_spans, m.profile_span_s);
  return m;
}

// ---------------------------------------------------------------------------

namespace {

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

std::string report_to_json(const SessionReport& r) {
  json profile = json::array();
  for (const auto& b : r.profile) {
    profile.push_back({{"lo_s", b.lo},
                       {"hi_s", b.hi},
                       {"gaps", b.gaps},
                       {"successes", b.successes},
                       {"cumulative_gaps", b.cumulative_gaps},
                       {"cumulative_successes", b.cumulative_successes},
                       {"cumulative_fraction", opt(b.cumulative_fraction)}});
  }
  json spans = json::array();
  for (const auto& t : r.tick_spans) {
    spans.push_back({{"seq", t.seq},
                     {"arrival_ns", t.arrival_ns},
                     {"worst_core_s", t.worst_core_s},
                     {"successes", t.successes},
                     {"requested", t.requested}});
  }
  const json j{
      {"platform", r.platform},
      {"model", r.model},
      {"n", r.n},
      {"variant", r.variant},
      {"precision", r.precision},
      {"governor", r.governor},
      {"workers", r.workers},
      {"pacing", r.pacing},
      {"scaleout", r.scaleout},
      {"nodes", r.nodes},
      {"power_source", r.power_source},
      {"mean_power_w", r.mean_power},
      {"s_per_opt", opt(r.s_per_opt)},
      {"j_per_opt", opt(r.j_per_opt)},
      {"qos", opt(r.qos)},
      {"duration_s", r.duration_s},
      {"energy_j", r.energy_j},
      {"ticks", r.ticks},
      {"success", r.success},
      {"abandoned", r.abandoned},
      {"errored", r.errored},
      {"feed_gaps", r.feed_gaps ? json(*r.feed_gaps) : json(nullptr)},
      {"max_rel_error_vs_bs", opt(r.max_rel_error)},
      {"profile_span_s", r.profile_span_s},
      {"profile", std::move(profile)},
      {"tick_spans", std::move(spans)},
  };
  return j.dump(2) + "\n";
}

SessionReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    SessionReport r;
    r.platform = j.at("platform").get<std::string>();
    r.model = j.at("model").get<std::string>();
    r.n = j.at("n").get<std::uint64_t>();
    r.variant = j.at("variant").get<std::string>();
    r.precision = j.at("precision").get<std::string>();
    r.governor = j.at("governor").get<std::string>();
    r.workers = j.at("workers").get<std::size_t>();
    r.pacing = j.at("pacing").get<std::string>();
    r.scaleout = j.value("scaleout", std::string("none"));
    r.nodes = j.value("nodes", std::size_t{1});
    r.power_source = j.value("power_source", std::string());
    r.mean_power = j.at("mean_power_w").get<double>();
    r.s_per_opt = opt_from(j, "s_per_opt");
    r.j_per_opt = opt_from(j, "j_per_opt");
    r.qos = opt_from(j, "qos");
    r.duration_s = j.at("duration_s").get<double>();
    r.energy_j = j.at("energy_j").get<double>();
    r.ticks = j.value("ticks", std::size_t{0});
    r.success = j.value("success", std::size_t{0});
    r.abandoned = j.value("abandoned", std::size_t{0});
    r.errored = j.value("errored", std::size_t{0});
    if (j.contains("feed_gaps") && !j.at("feed_gaps").is_null()) r.feed_gaps = j.at("feed_gaps").get<std::size_t>();
    r.max_rel_error = opt_from(j, "max_rel_error_vs_bs");
    r.profile_span_s = j.value("profile_span_s", 0.0);
    if (j.contains("profile")) {
      for (const auto& b : j.at("profile")) {
        ProfileBin bin;
        bin.lo = b.at("lo_s").get<double>();
        bin.hi = b.at("hi_s").get<double>();
        bin.gaps = b.at("gaps").get<std::size_t>();
        bin.successes = b.at("successes").get<std::size_t>();
        bin.cumulative_gaps = b.at("cumulative_gaps").get<std::size_t>();
        bin.cumulative_successes = b.at("cumulative_successes").get<std::size_t>();
        bin.cumulative_fraction = opt_from(b, "cumulative_fraction");
        r.profile.push_back(bin);
      }
    }
    if (j.contains("tick_spans")) {
      for (const auto& t : j.at("tick_spans")) {
        r.tick_spans.push_back({t.at("seq").get<std::uint64_t>(), t.at("arrival_ns").get<std::int64_t>(),
                                t.at("worst_core_s").get<double>(), t.at("successes").get<std::size_t>(),
                                t.at("requested").get<std::size_t>()});
      }
    }
    if (r.qos && (*r.qos < 0.0 || *r.qos > 1.0)) throw ValidationError("qos outside [0, 1]");
    if (!(r.mean_power >= 0.0) || !(r.energy_j >= 0.0)) throw ValidationError("negative power or energy");
    return r;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("report: ") + e.what());
  }
}

void write_report(const std::filesystem::path& path, const SessionReport& report) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out || !(out << report_to_json(report)).flush()) throw IoError("cannot write " + path.string());
}

SessionReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return report_from_json(text.str());
}

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string report_csv_header() { return "platform,model,N,variant,governor,mean_power_w,s_per_opt,j_per_opt,qos\n"; }

std::string report_csv_row(const SessionReport& r) {
  std::string row;
  row += csv_field(r.platform) + ',';
  row += csv_field(r.model) + ',';
  row += std::to_string(r.n) + ',';
  row += csv_field(r.variant) + ',';
  row += csv_field(r.governor) + ',';
  row += format_number(r.mean_power) + ',';
  row += format_number(r.s_per_opt) + ',';
  row += format_number(r.j_per_opt) + ',';
  row += format_number(r.qos) + '\n';
  return row;
}

}  // namespace optbench
