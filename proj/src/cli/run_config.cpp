#include "optbench/cli/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "optbench/errors.hpp"
#include "optbench/metrics/rapl.hpp"

namespace optbench {

PowerKind parse_power_kind(std::string_view text) {
  if (text == "rapl") return PowerKind::Rapl;
  if (text == "trace") return PowerKind::Trace;
  if (text == "constant") return PowerKind::Constant;
  throw ArgumentError("power source must be rapl, trace or constant");
}

std::string_view to_string(PowerKind kind) {
  switch (kind) {
    case PowerKind::Rapl: return "rapl";
    case PowerKind::Trace: return "trace";
    case PowerKind::Constant: return "constant";
  }
  return "unknown";
}

std::uint64_t RunConfig::resolved_n() const {
  if (n) return *n;
  switch (model) {
    case ModelKind::MonteCarlo: return 1'000'000;
    case ModelKind::BinomialTree: return 5000;
    case ModelKind::Mock: return 1;
  }
  return 1;
}

void RunConfig::validate() const {
  if (resolved_n() == 0) throw ArgumentError("n must be positive");
  if (workers == 0) throw ArgumentError("workers must be at least 1");
  if (power == PowerKind::Constant && (!(watts >= 0.0) || !std::isfinite(watts))) {
    throw ArgumentError("constant power must be >= 0");
  }
  if (power == PowerKind::Trace && power_trace.empty()) throw ArgumentError("--power trace needs --power-trace");
  if (!(volatility > 0.0)) throw ArgumentError("volatility must be positive");
  KernelVariant::parse(variant).lane_config(precision).validate();
}

ModelConfig RunConfig::model_config() const {
  ModelConfig m;
  m.kind = model;
  m.n = resolved_n();
  m.variant = KernelVariant::parse(variant);
  m.precision = precision;
  m.screening = screening;
  m.seed = seed;
  m.params = PricingParams{rate, volatility};
  return m;
}

SessionMeta RunConfig::meta() const {
  SessionMeta m;
  m.model = std::string(to_string(model));
  m.n = resolved_n();
  m.variant = variant;
  m.precision = std::string(to_string(precision));
  m.governor = governor;
  m.platform = platform;
  m.workers = workers;
  m.seed = seed;
  m.rate = rate;
  m.volatility = volatility;
  return m;
}

std::unique_ptr<PowerSource> open_power_source(const RunConfig& cfg) {
  switch (cfg.power) {
    case PowerKind::Constant: return std::make_unique<ConstantSource>(cfg.watts);
    case PowerKind::Trace: return std::make_unique<TraceSource>(read_power_trace(cfg.power_trace));
    case PowerKind::Rapl: return std::make_unique<RaplSource>(cfg.rapl_domain);
  }
  throw ArgumentError("unknown power source");
}

namespace {

double parse_double(std::string_view text, const char* what) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw ArgumentError(std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

void apply_strike_grid(BookSpec& spec, std::string_view grid) {
  const auto a = grid.find(':');
  const auto b = a == std::string_view::npos ? a : grid.find(':', a + 1);
  if (b == std::string_view::npos) throw ArgumentError("strike grid must be lo:hi:step");
  spec.strike_low = parse_double(grid.substr(0, a), "strike");
  spec.strike_high = parse_double(grid.substr(a + 1, b - a - 1), "strike");
  spec.strike_step = parse_double(grid.substr(b + 1), "strike step");
  if (!(spec.strike_low > 0.0) || spec.strike_high < spec.strike_low || !(spec.strike_step > 0.0)) {
    throw ArgumentError("strike grid needs 0 < lo <= hi and step > 0");
  }
}

std::vector<double> parse_expiries(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const double t = parse_double(trim(text.substr(0, comma)), "expiry");
    if (!(t > 0.0)) throw ArgumentError("expiries must be positive");
    out.push_back(t);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ArgumentError("no expiries given");
  return out;
}

std::vector<std::string> expand_config_files(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::vector<std::string> files;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 == args.size()) throw ArgumentError("--config needs a file");
      files.push_back(args[++i]);
    } else if (args[i].rfind("--config=", 0) == 0) {
      files.push_back(args[i].substr(9));
    } else {
      out.push_back(args[i]);
    }
  }
  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    for (const auto& a : out) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot read config " + file);
    std::string raw;
    std::size_t line_number = 0;
    std::vector<std::string> extra;
    while (std::getline(in, raw)) {
      ++line_number;
      std::string_view line = trim(raw);
      if (line.empty() || line.front() == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ParseError(line_number, "expected key=value in " + file);
      const std::string key(trim(line.substr(0, eq)));
      const std::string value(trim(line.substr(eq + 1)));
      if (key.empty()) throw ParseError(line_number, "empty key in " + file);
      if (!given(key)) extra.push_back("--" + key + "=" + value);
    }
    out.insert(out.end(), extra.begin(), extra.end());
  }
  return out;
}

}  // namespace optbench
