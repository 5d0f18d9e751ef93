#include "optbench/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "optbench/cli/run_config.hpp"
#include "optbench/errors.hpp"
#include "optbench/feed/replay.hpp"
#include "optbench/feed/subscriber.hpp"
#include "optbench/feed/synthetic.hpp"
#include "optbench/feed/trace.hpp"
#include "optbench/metrics/iso_qos.hpp"
#include "optbench/metrics/report.hpp"
#include "optbench/metrics/sampler.hpp"
#include "optbench/service/session_io.hpp"

namespace optbench {

namespace fs = std::filesystem;

namespace {

/// Socket or host failure, as opposed to bad input data.
class EnvironmentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

template <class F>
auto on_network(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const IoError& e) {
    throw EnvironmentError(e.what());
  }
}

struct GroupFlags {
  std::string address = MulticastGroup{}.address;
  int port = MulticastGroup{}.port;
  std::string interface = MulticastGroup{}.interface;

  void add(CLI::App* app) {
    app->add_option("--group", address, "Multicast group address")->capture_default_str();
    app->add_option("--port", port, "UDP port")->capture_default_str()->check(CLI::Range(1, 65535));
    app->add_option("--interface", interface, "Local interface address")->capture_default_str();
  }

  MulticastGroup group() const {
    MulticastGroup g;
    g.address = address;
    g.port = static_cast<std::uint16_t>(port);
    g.interface = interface;
    return g;
  }
};

std::string fmt(double v, const char* spec = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text).flush()) throw IoError("cannot write " + path.string());
}

// ---------------------------------------------------------------------------
// gen-trace

struct GenTraceArgs {
  std::string arrivals = "fixed";
  double rate = 1.0;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::string symbol = "FB";
  double start_price = 67.25;
  double tick_vol = 1e-3;
  std::string out_dir = ".";
  std::string name = "trace.csv";
};

int cmd_gen_trace(const GenTraceArgs& a, std::ostream& out) {
  SyntheticTraceSpec spec;
  spec.arrivals = parse_arrival_model(a.arrivals);
  if (!(a.rate > 0.0)) throw ArgumentError("--rate must be positive");
  if (a.count == 0) throw ArgumentError("--count must be positive");
  spec.rate_hz = a.rate;
  spec.count = a.count;
  spec.seed = a.seed;
  spec.symbol = a.symbol;
  spec.start_price = a.start_price;
  spec.tick_volatility = a.tick_vol;
  const TickTrace trace = generate_trace(spec);
  const fs::path path = fs::path(a.out_dir) / a.name;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_trace(path, trace);
  const double span_s = static_cast<double>(trace.ticks.back().timestamp_ns - trace.ticks.front().timestamp_ns) * 1e-9;
  out << "wrote " << trace.ticks.size() << " ticks to " << path.string() << "\n";
  if (trace.ticks.size() > 1) {
    out << "mean gap " << fmt(span_s / static_cast<double>(trace.ticks.size() - 1)) << " s, span " << fmt(span_s)
        << " s\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// replay

struct ReplayArgs {
  std::string trace;
  GroupFlags group;
  double speed = 1.0;
  bool burst = false;
};

int cmd_replay(const ReplayArgs& a, std::ostream& out) {
  const TickTrace trace = read_trace(a.trace);
  ReplayOptions opts;
  opts.group = a.group.group();
  opts.speed = a.speed;
  opts.burst = a.burst;
  if (!(a.speed > 0.0)) throw ArgumentError("--speed must be positive");
  const ReplayStats stats = on_network([&] { return replay(trace, opts); });
  out << "sent " << stats.sent << " ticks to " << opts.group.address << ":" << opts.group.port << "\n";
  out << "max lateness " << fmt(static_cast<double>(stats.max_lateness_ns) * 1e-6) << " ms, "
      << stats.late_beyond_budget << " late beyond budget\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// subscribe-dump

struct DumpArgs {
  GroupFlags group;
  std::size_t count = 0;  // 0: until idle
  int wait_ms = 10'000;
  int idle_ms = 2'000;
  std::string out_dir = ".";
  std::string name = "recorded.csv";
};

int cmd_subscribe_dump(const DumpArgs& a, std::ostream& out) {
  Subscriber sub = on_network([&] { return Subscriber(a.group.group()); });
  TickTrace trace;
  trace.header.session_start = wallclock_iso8601();
  auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(a.wait_ms);
  while (a.count == 0 || trace.ticks.size() < a.count) {
    const auto now = std::chrono::steady_clock::now();
    if (now >= deadline) break;
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now);
    auto tick = on_network([&] { return sub.next(std::min(left, std::chrono::milliseconds(100))); });
    if (!tick) continue;
    trace.ticks.push_back(*tick);
    deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(a.idle_ms);
  }
  // Rows are renumbered from 0 on write; the feed's own sequence gaps are reported below.
  for (std::size_t i = 0; i < trace.ticks.size(); ++i) trace.ticks[i].seq = i;
  trace.refresh_symbols();
  const fs::path path = fs::path(a.out_dir) / a.name;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_trace(path, trace);
  const auto& s = sub.stats();
  out << "recorded " << trace.ticks.size() << " ticks to " << path.string() << "\n";
  out << "gaps " << s.gaps << ", malformed " << s.malformed << ", out of order " << s.out_of_order << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string model = "MC";
  std::optional<std::uint64_t> n;
  std::string precision = "64";
  std::string power = "rapl";
  RunConfig cfg;
  std::string trace;
  std::string book;
  std::size_t book_size = 617;
  std::string strike_grid = "40:100:2.5";
  std::string expiries = "0.25,0.5,1";
  bool burst = false;
  bool virtual_time = false;
  double speed = 1.0;
  GroupFlags group;
  double mock_cost_us = 1000.0;
  double checkpoint_us = 1000.0;
  int drain_ms = 500;
  int period_ms = 100;
  std::string scaleout = "none";
  std::string out_dir = ".";
  std::string name = "bench";
};

/// Feeds a live multicast session until the replayed trace is exhausted.
class SubscriberSource : public TickSource {
public:
  SubscriberSource(Subscriber& sub, std::uint64_t last_seq, const std::atomic<bool>& replay_done,
                   const std::atomic<bool>& replay_failed, std::chrono::milliseconds drain)
      : sub_(sub), last_seq_(last_seq), done_(replay_done), failed_(replay_failed), drain_(drain) {}

  std::optional<MarketTick> next() override {
    if (finished_) return std::nullopt;
    std::optional<std::chrono::steady_clock::time_point> idle_since;
    while (true) {
      auto tick = sub_.next(std::chrono::milliseconds(20));
      if (tick) {
        if (tick->seq >= last_seq_) finished_ = true;
        last_seen_ = tick->seq;
        return tick;
      }
      if (failed_) throw IoError("replay failed");
      if (!done_) continue;
      const auto now = std::chrono::steady_clock::now();
      if (!idle_since) idle_since = now;
      if (now - *idle_since >= drain_) {
        finished_ = true;
        return std::nullopt;
      }
    }
  }

  std::optional<std::uint64_t> last_seen() const { return last_seen_; }

private:
  Subscriber& sub_;
  std::uint64_t last_seq_;
  const std::atomic<bool>& done_;
  const std::atomic<bool>& failed_;
  std::chrono::milliseconds drain_;
  bool finished_ = false;
  std::optional<std::uint64_t> last_seen_;
};

ContractBook load_or_generate_book(const BenchArgs& a) {
  if (!a.book.empty()) return read_book(fs::path(a.book));
  BookSpec spec;
  if (a.book_size == 0) throw ArgumentError("--book-size must be positive");
  spec.size = a.book_size;
  apply_strike_grid(spec, a.strike_grid);
  spec.expiries = parse_expiries(a.expiries);
  return generate_book(spec);
}

std::vector<PowerSample> virtual_power(PowerSource& source, std::int64_t end_ns, std::int64_t period_ns) {
  std::vector<PowerSample> samples;
  for (std::int64_t t = 0;; t += period_ns) {
    const std::int64_t at = std::min(t, end_ns);
    auto fresh = source.poll(at);
    samples.insert(samples.end(), fresh.begin(), fresh.end());
    if (at == end_ns) break;
  }
  if (samples.size() == 1) samples.push_back({end_ns + 1, samples.front().watts, samples.front().source});
  return samples;
}

int cmd_bench(BenchArgs a, std::ostream& out, std::ostream& err) {
  RunConfig& cfg = a.cfg;
  cfg.model = parse_model_kind(a.model);
  cfg.n = a.n;
  cfg.precision = parse_precision(a.precision);
  cfg.power = parse_power_kind(a.power);
  if (a.virtual_time) cfg.model = ModelKind::Mock;
  cfg.validate();
  if (a.burst && a.virtual_time) throw ArgumentError("--burst and --virtual are exclusive");
  if (!a.virtual_time && cfg.model == ModelKind::Mock) throw ArgumentError("the MOCK model needs --virtual");
  if (a.virtual_time && cfg.power == PowerKind::Rapl) {
    throw ArgumentError("virtual-time runs need --power constant or --power trace");
  }
  if (a.scaleout != "none") parse_scaleout(a.scaleout);
  if (a.trace.empty()) throw ArgumentError("--trace is required");

  const TickTrace trace = read_trace(a.trace);
  if (trace.ticks.empty()) throw ValidationError("trace has no ticks");
  const ContractBook book = load_or_generate_book(a);
  book.validate();

  std::unique_ptr<PowerSource> power;
  try {
    power = open_power_source(cfg);
  } catch (const SourceUnavailable& e) {
    err << "power source unavailable: " << e.what() << "\n"
        << "use --power constant --watts <W> or --power trace --power-trace <file>\n";
    return kExitEnvironment;
  }

  SessionOptions opts;
  opts.workers = cfg.workers;
  opts.meta = cfg.meta();
  opts.meta.scaleout = a.scaleout;

  SessionLog log;
  std::vector<PowerSample> samples;
  std::optional<std::size_t> gaps;

  if (a.virtual_time) {
    VirtualKernel vk;
    const auto cost = static_cast<std::int64_t>(a.mock_cost_us * 1000.0);
    if (cost < 0) throw ArgumentError("--mock-cost-us must be >= 0");
    vk.cost_ns = [cost](std::size_t, std::size_t) { return cost; };
    vk.checkpoint_ns = static_cast<std::int64_t>(a.checkpoint_us * 1000.0);
    vk.params = PricingParams{cfg.rate, cfg.volatility};
    log = run_virtual_session(trace.ticks, book, vk, opts);
    samples = virtual_power(*power, log.end_ns, std::int64_t{a.period_ms} * 1'000'000);
  } else {
    const PricingKernel kernel = make_model_kernel(cfg.model_config());
    const auto origin = std::chrono::steady_clock::now();
    PowerSampler sampler(*power, origin, std::chrono::milliseconds(a.period_ms));
    if (a.burst) {
      opts.pacing = Pacing::Burst;
      MemoryTickSource source(trace.ticks, false);
      sampler.start();
      log = run_session(source, book, kernel, opts);
      samples = sampler.stop();
    } else {
      if (!(a.speed > 0.0)) throw ArgumentError("--speed must be positive");
      Subscriber sub = on_network([&] { return Subscriber(a.group.group()); });
      std::atomic<bool> replay_done{false};
      std::atomic<bool> replay_failed{false};
      std::string replay_error;
      ReplayOptions ropts;
      ropts.group = a.group.group();
      ropts.speed = a.speed;
      sampler.start();
      std::jthread replayer([&] {
        try {
          replay(trace, ropts);
        } catch (const std::exception& e) {
          replay_error = e.what();
          replay_failed = true;
        }
        replay_done = true;
      });
      SubscriberSource source(sub, trace.ticks.back().seq, replay_done, replay_failed,
                              std::chrono::milliseconds(a.drain_ms));
      log = run_session(source, book, kernel, opts);
      replayer.join();
      samples = sampler.stop();
      // Losses after the last delivered tick are invisible to the sequence check.
      const std::uint64_t last = trace.ticks.back().seq;
      const std::optional<std::uint64_t> seen = source.last_seen();
      gaps = sub.stats().gaps + (seen ? last - std::min(last, *seen) : trace.ticks.size());
      if (replay_failed) {
        err << "replay failed: " << replay_error << "\n";
        log.stream_error = true;
        log.error_message = replay_error;
      }
    }
  }

  ReportOptions ropts;
  ropts.book = &book;
  ropts.params = PricingParams{cfg.rate, cfg.volatility};
  ropts.power_source = std::string(to_string(cfg.power));
  SessionReport report = build_report(log, samples, ropts);
  report.feed_gaps = gaps;

  const fs::path dir(a.out_dir);
  fs::create_directories(dir);
  write_report(dir / (a.name + ".report.json"), report);
  write_text(dir / (a.name + ".summary.csv"), report_csv_header() + report_csv_row(report));
  write_session_log(log, dir / (a.name + ".session.jsonl"));
  if (a.book.empty()) write_book(dir / (a.name + ".book.csv"), book);

  out << "ticks " << report.ticks << ", pricings " << report.success + report.abandoned + report.errored
      << " (success " << report.success << ", abandoned " << report.abandoned << ", errored " << report.errored
      << ")\n";
  out << "P " << fmt(report.mean_power) << " W, S/Opt " << format_number(report.s_per_opt) << ", J/Opt "
      << format_number(report.j_per_opt) << ", QoS " << format_number(report.qos) << "\n";
  if (report.max_rel_error) out << "max rel error vs Black-Scholes " << fmt(*report.max_rel_error) << "\n";
  if (gaps) out << "feed gaps " << *gaps << "\n";
  out << "report " << (dir / (a.name + ".report.json")).string() << "\n";
  if (log.stream_error) {
    err << "tick stream failed: " << log.error_message << "\n";
    return kExitEnvironment;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// compare

struct CompareArgs {
  std::vector<std::string> reports;
  double qos_target = 1.0;
  std::string scaleout = "split";
  std::string out_dir;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  if (a.reports.size() < 2) throw ArgumentError("compare needs at least two reports");
  if (!(a.qos_target >= 0.0 && a.qos_target <= 1.0)) throw ArgumentError("--qos-target must be in [0, 1]");
  const ScaleoutMode mode = parse_scaleout(a.scaleout);
  std::vector<SessionReport> reports;
  std::vector<std::string> labels;
  for (const auto& entry : a.reports) {
    // "a.json+b.json" merges per-node reports into one platform.
    std::vector<SessionReport> nodes;
    std::string_view rest = entry;
    while (true) {
      const auto plus = rest.find('+');
      nodes.push_back(read_report(fs::path(std::string(rest.substr(0, plus)))));
      if (plus == std::string_view::npos) break;
      rest.remove_prefix(plus + 1);
    }
    reports.push_back(nodes.size() == 1 ? nodes.front() : merge_reports(nodes, mode));
    labels.push_back(nodes.size() == 1 ? fs::path(entry).stem().string() : entry);
  }
  const IsoQosTable table = iso_qos_compare(reports, a.qos_target, labels);
  out << format_iso_qos_text(table);
  if (!a.out_dir.empty()) {
    write_text(fs::path(a.out_dir) / "compare.csv", format_iso_qos_csv(table));
    write_text(fs::path(a.out_dir) / "compare.txt", format_iso_qos_text(table));
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateArgs {
  std::vector<std::string> traces, books, reports, sessions;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  if (a.traces.empty() && a.books.empty() && a.reports.empty() && a.sessions.empty()) {
    throw ArgumentError("nothing to validate");
  }
  for (const auto& p : a.traces) {
    const TickTrace t = read_trace(fs::path(p));
    t.validate();
    out << "ok trace " << p << " (" << t.ticks.size() << " ticks)\n";
  }
  for (const auto& p : a.books) {
    const ContractBook b = read_book(fs::path(p));
    b.validate();
    out << "ok book " << p << " (" << b.size() << " contracts)\n";
  }
  for (const auto& p : a.reports) {
    const SessionReport r = read_report(p);
    if (r.j_per_opt && r.s_per_opt) {
      const double expect = r.mean_power * *r.s_per_opt;
      if (std::abs(*r.j_per_opt - expect) > 1e-3 * std::max(std::abs(expect), 1e-300)) {
        throw ValidationError(p + ": j_per_opt differs from mean_power x s_per_opt");
      }
    }
    out << "ok report " << p << "\n";
  }
  for (const auto& p : a.sessions) {
    const SessionLog log = read_session_log(p);
    std::set<std::pair<std::uint64_t, std::string>> seen;
    for (const auto& r : log.records) {
      if (!log.find_tick(r.tick_seq)) throw ValidationError(p + ": record for unknown tick");
      if (!seen.emplace(r.tick_seq, r.contract_id).second) throw ValidationError(p + ": duplicate record");
      if (r.status == PricingStatus::Success && r.end_ns < r.start_ns) throw ValidationError(p + ": end < start");
    }
    out << "ok session " << p << " (" << log.records.size() << " records)\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"optbench: option-pricing energy benchmark harness", "optbench"};
  app.require_subcommand(1);
  app.add_option("--config", "key=value file of defaults for the subcommand's flags");

  GenTraceArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-trace", "Generate a synthetic tick trace");
  gen_cmd->add_option("--arrivals", gen.arrivals, "fixed|poisson")->capture_default_str();
  gen_cmd->add_option("--rate", gen.rate, "Mean ticks per second")->capture_default_str();
  gen_cmd->add_option("--count", gen.count, "Number of ticks")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--symbol", gen.symbol)->capture_default_str();
  gen_cmd->add_option("--start-price", gen.start_price)->capture_default_str();
  gen_cmd->add_option("--tick-vol", gen.tick_vol, "Per-tick log-return stdev")->capture_default_str();
  gen_cmd->add_option("--out-dir", gen.out_dir)->capture_default_str();
  gen_cmd->add_option("--name", gen.name, "Output file name")->capture_default_str();

  ReplayArgs rep;
  auto* rep_cmd = app.add_subcommand("replay", "Replay a trace onto UDP multicast");
  rep_cmd->add_option("--trace", rep.trace)->required();
  rep.group.add(rep_cmd);
  rep_cmd->add_option("--speed", rep.speed, "Time compression factor")->capture_default_str();
  rep_cmd->add_flag("--burst", rep.burst, "Send back to back, ignoring timestamps");

  DumpArgs dump;
  auto* dump_cmd = app.add_subcommand("subscribe-dump", "Record ticks from multicast into a trace file");
  dump.group.add(dump_cmd);
  dump_cmd->add_option("--count", dump.count, "Stop after this many ticks (0: until idle)");
  dump_cmd->add_option("--wait-ms", dump.wait_ms, "Wait for the first tick")->capture_default_str();
  dump_cmd->add_option("--idle-ms", dump.idle_ms, "Stop after this long without ticks")->capture_default_str();
  dump_cmd->add_option("--out-dir", dump.out_dir)->capture_default_str();
  dump_cmd->add_option("--name", dump.name)->capture_default_str();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a pricing session and write its report");
  bench_cmd->add_option("--model", bench.model, "MC|BT")->capture_default_str();
  bench_cmd->add_option("--n", bench.n, "MC draws or BT steps (default 1000000 / 5000)");
  bench_cmd->add_option("--variant", bench.cfg.variant, "NOVECT|AUTOVECT|VEC<w>|INTR<w>")->capture_default_str();
  bench_cmd->add_option("--precision", bench.precision, "32|64")->capture_default_str();
  bench_cmd->add_option("--workers", bench.cfg.workers)->capture_default_str();
  bench_cmd->add_option("--governor", bench.cfg.governor, "Governor label")->capture_default_str();
  bench_cmd->add_option("--platform", bench.cfg.platform, "Platform tag, nodes x cores x threads")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.cfg.seed)->capture_default_str();
  bench_cmd->add_option("--rate", bench.cfg.rate, "Risk-free rate")->capture_default_str();
  bench_cmd->add_option("--volatility", bench.cfg.volatility)->capture_default_str();
  bench_cmd->add_flag("--screening,!--no-screening", bench.cfg.screening, "MC threshold screening");
  bench_cmd->add_option("--power", bench.power, "rapl|trace|constant")->capture_default_str();
  bench_cmd->add_option("--watts", bench.cfg.watts, "Constant power value");
  bench_cmd->add_option("--power-trace", bench.cfg.power_trace, "CSV timestamp_ns,watts");
  bench_cmd->add_option("--rapl-domain", bench.cfg.rapl_domain)->capture_default_str();
  bench_cmd->add_option("--trace", bench.trace, "Tick trace file")->required();
  bench_cmd->add_option("--book", bench.book, "Contract book CSV");
  bench_cmd->add_option("--book-size", bench.book_size, "Generated book size")->capture_default_str();
  bench_cmd->add_option("--strike-grid", bench.strike_grid, "lo:hi:step")->capture_default_str();
  bench_cmd->add_option("--expiries", bench.expiries, "Comma-separated years")->capture_default_str();
  bench_cmd->add_flag("--burst", bench.burst, "Closed loop: next tick after the book is priced");
  bench_cmd->add_flag("--virtual", bench.virtual_time, "Virtual time with the mock kernel");
  bench_cmd->add_option("--speed", bench.speed, "Replay time compression")->capture_default_str();
  bench.group.add(bench_cmd);
  bench_cmd->add_option("--mock-cost-us", bench.mock_cost_us, "Mock cost per contract")->capture_default_str();
  bench_cmd->add_option("--checkpoint-us", bench.checkpoint_us, "Mock cancellation interval")
      ->capture_default_str();
  bench_cmd->add_option("--drain-ms", bench.drain_ms, "Quiet time ending a live run")->capture_default_str();
  bench_cmd->add_option("--sample-period-ms", bench.period_ms, "Power polling period")->capture_default_str();
  bench_cmd->add_option("--scaleout", bench.scaleout, "none|split|replicate")->capture_default_str();
  bench_cmd->add_option("--out-dir", bench.out_dir)->capture_default_str();
  bench_cmd->add_option("--name", bench.name, "Output file prefix")->capture_default_str();

  CompareArgs cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Iso-QoS comparison of report files");
  cmp_cmd->add_option("reports", cmp.reports, "Report JSON files; join node reports with '+'")->required();
  cmp_cmd->add_option("--qos-target", cmp.qos_target)->capture_default_str();
  cmp_cmd->add_option("--scaleout", cmp.scaleout, "split|replicate, for '+' groups")->capture_default_str();
  cmp_cmd->add_option("--out-dir", cmp.out_dir, "Write compare.csv and compare.txt here");

  ValidateArgs val;
  auto* val_cmd = app.add_subcommand("validate", "Check trace, book, report and session files");
  val_cmd->add_option("--trace", val.traces);
  val_cmd->add_option("--book", val.books);
  val_cmd->add_option("--report", val.reports);
  val_cmd->add_option("--session", val.sessions);

  try {
    std::vector<std::string> args = expand_config_files(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }

  try {
    if (*gen_cmd) return cmd_gen_trace(gen, out);
    if (*rep_cmd) return cmd_replay(rep, out);
    if (*dump_cmd) return cmd_subscribe_dump(dump, out);
    if (*bench_cmd) return cmd_bench(bench, out, err);
    if (*cmp_cmd) return cmd_compare(cmp, out);
    if (*val_cmd) return cmd_validate(val, out);
  } catch (const ArgumentError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SourceUnavailable& e) {
    err << "environment error: " << e.what() << "\n";
    return kExitEnvironment;
  } catch (const EnvironmentError& e) {
    err << "environment error: " << e.what() << "\n";
    return kExitEnvironment;
  } catch (const std::exception& e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace optbench
