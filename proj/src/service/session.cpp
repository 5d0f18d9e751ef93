#include "optbench/service/session.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <map>
#include <mutex>
#include <thread>

#include "optbench/errors.hpp"
#include "optbench/pricing/binomial_tree.hpp"
#include "optbench/pricing/black_scholes.hpp"
#include "optbench/pricing/monte_carlo.hpp"
#include "worker_loop.hpp"

namespace optbench {

std::string_view to_string(PricingStatus status) {
  switch (status) {
    case PricingStatus::Success: return "success";
    case PricingStatus::Abandoned: return "abandoned";
    case PricingStatus::Errored: return "errored";
  }
  return "unknown";
}

PricingStatus parse_pricing_status(std::string_view text) {
  if (text == "success") return PricingStatus::Success;
  if (text == "abandoned") return PricingStatus::Abandoned;
  if (text == "errored") return PricingStatus::Errored;
  throw ValidationError("unknown pricing status '" + std::string(text) + "'");
}

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::MonteCarlo: return "MC";
    case ModelKind::BinomialTree: return "BT";
    case ModelKind::Mock: return "MOCK";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view text) {
  if (text == "MC" || text == "mc") return ModelKind::MonteCarlo;
  if (text == "BT" || text == "bt") return ModelKind::BinomialTree;
  if (text == "MOCK" || text == "mock") return ModelKind::Mock;
  throw ArgumentError("model must be MC, BT or MOCK");
}

const TickArrival* SessionLog::find_tick(std::uint64_t seq) const {
  const auto it = std::find_if(ticks.begin(), ticks.end(), [&](const TickArrival& t) { return t.seq == seq; });
  return it == ticks.end() ? nullptr : &*it;
}

std::uint64_t pricing_seed(std::uint64_t base, std::uint64_t tick_seq, std::size_t contract_index) {
  // splitmix64 finalizer over a combined key
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (tick_seq + 1) + 0xbf58476d1ce4e5b9ull * (contract_index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

PricingKernel make_model_kernel(const ModelConfig& cfg) {
  if (cfg.n == 0) throw ArgumentError("model N must be positive");
  const LaneConfig lanes = cfg.variant.lane_config(cfg.precision);
  lanes.validate();
  switch (cfg.kind) {
    case ModelKind::MonteCarlo:
      return [cfg, lanes](const OptionContract& contract, std::size_t index, const MarketTick& tick,
                          const CancelCheck& cancelled) {
        McConfig mc;
        mc.draws = cfg.n;
        mc.seed = pricing_seed(cfg.seed, tick.seq, index);
        mc.screening = cfg.screening;
        mc.precision = cfg.precision;
        mc.lanes = lanes;
        return mc_price(contract, SpotPrice{tick.price}, cfg.params, mc, cancelled);
      };
    case ModelKind::BinomialTree:
      return [cfg, lanes](const OptionContract& contract, std::size_t, const MarketTick& tick,
                          const CancelCheck& cancelled) {
        BtConfig bt;
        bt.steps = cfg.n;
        bt.precision = cfg.precision;
        bt.lanes = lanes;
        return bt_price(contract, SpotPrice{tick.price}, cfg.params, bt, cancelled);
      };
    case ModelKind::Mock:
      break;
  }
  throw ArgumentError("the mock model only runs in virtual time");
}

// ---------------------------------------------------------------------------

MemoryTickSource::MemoryTickSource(std::vector<MarketTick> ticks, bool paced, double speed)
    : ticks_(std::move(ticks)), paced_(paced), speed_(speed) {
  if (paced_ && !(speed_ > 0.0)) throw ArgumentError("speed must be positive");
}

std::optional<MarketTick> MemoryTickSource::next() {
  if (next_ >= ticks_.size()) return std::nullopt;
  if (paced_) {
    using clock = std::chrono::steady_clock;
    const auto now_ns = [] {
      return std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now().time_since_epoch()).count();
    };
    if (!start_ns_) start_ns_ = now_ns();
    const auto offset = static_cast<std::int64_t>(
        static_cast<double>(ticks_[next_].timestamp_ns - ticks_.front().timestamp_ns) / speed_);
    std::this_thread::sleep_until(clock::time_point(std::chrono::nanoseconds(*start_ns_ + offset)));
  }
  return ticks_[next_++];
}

// ---------------------------------------------------------------------------

namespace {

class TickBoard {
public:
  explicit TickBoard(std::size_t workers) : workers_(workers) {}

  void publish(const MarketTick& tick, std::int64_t arrival_ns) {
    {
      std::lock_guard lock(mutex_);
      ticks_.push_back(tick);
      arrivals_.push_back(arrival_ns);
      finished_for_newest_ = 0;
      published_.store(ticks_.size(), std::memory_order_release);
    }
    tick_cv_.notify_all();
  }

  void close(bool error, std::string message) {
    {
      std::lock_guard lock(mutex_);
      closed_ = true;
      error_ = error;
      message_ = std::move(message);
    }
    tick_cv_.notify_all();
  }

  void wait_all_finished() {
    std::unique_lock lock(mutex_);
    done_cv_.wait(lock, [&] { return finished_for_newest_ == workers_; });
  }

  std::optional<std::size_t> wait_for_tick(std::size_t next) {
    std::unique_lock lock(mutex_);
    tick_cv_.wait(lock, [&] { return ticks_.size() > next || closed_; });
    if (ticks_.size() > next) return ticks_.size() - 1;
    return std::nullopt;
  }

  std::size_t latest() const { return published_.load(std::memory_order_acquire) - 1; }

  std::int64_t arrival(std::size_t k) {
    std::lock_guard lock(mutex_);
    return arrivals_.at(k);
  }

  MarketTick tick(std::size_t k) {
    std::lock_guard lock(mutex_);
    return ticks_.at(k);
  }

  void finished(std::size_t k) {
    {
      std::lock_guard lock(mutex_);
      if (k + 1 == ticks_.size()) ++finished_for_newest_;
    }
    done_cv_.notify_all();
  }

  std::vector<TickArrival> arrivals() const {
    std::lock_guard lock(mutex_);
    std::vector<TickArrival> out;
    for (std::size_t i = 0; i < ticks_.size(); ++i) out.push_back({ticks_[i].seq, arrivals_[i], ticks_[i].price});
    return out;
  }

  bool error() const {
    std::lock_guard lock(mutex_);
    return error_;
  }

  std::string message() const {
    std::lock_guard lock(mutex_);
    return message_;
  }

private:
  const std::size_t workers_;
  mutable std::mutex mutex_;
  std::condition_variable tick_cv_;
  std::condition_variable done_cv_;
  std::deque<MarketTick> ticks_;
  std::deque<std::int64_t> arrivals_;
  std::atomic<std::size_t> published_{0};
  std::size_t finished_for_newest_ = 0;
  bool closed_ = false;
  bool error_ = false;
  std::string message_;
};

using steady = std::chrono::steady_clock;

std::int64_t since(steady::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(steady::now() - start).count();
}

class ThreadEnv {
public:
  ThreadEnv(TickBoard& board, const ContractBook& book, const PricingKernel& kernel, steady::time_point start)
      : board_(board), book_(book), kernel_(kernel), start_(start) {}

  std::optional<std::size_t> wait_for_tick(std::size_t next) { return board_.wait_for_tick(next); }
  std::size_t latest() const { return board_.latest(); }
  std::int64_t now() const { return since(start_); }
  std::int64_t arrival(std::size_t k) { return board_.arrival(k); }
  std::uint64_t tick_seq(std::size_t k) { return board_.tick(k).seq; }
  void finished(std::size_t k) { board_.finished(k); }

  std::optional<double> price(std::size_t contract, std::size_t k) {
    const MarketTick tick = board_.tick(k);
    const CancelCheck cancelled = [this, k] { return board_.latest() != k; };
    return kernel_(book_.contracts[contract], contract, tick, cancelled);
  }

private:
  TickBoard& board_;
  const ContractBook& book_;
  const PricingKernel& kernel_;
  steady::time_point start_;
};

class VirtualEnv {
public:
  VirtualEnv(std::span<const std::int64_t> arrivals, std::span<const MarketTick> ticks, const ContractBook& book,
             const VirtualKernel& kernel)
      : arrivals_(arrivals), ticks_(ticks), book_(book), kernel_(kernel) {}

  std::optional<std::size_t> wait_for_tick(std::size_t next) {
    if (next >= arrivals_.size()) return std::nullopt;
    now_ = std::max(now_, arrivals_[next]);
    return latest();
  }
  std::size_t latest() const { return latest_at(now_); }
  std::int64_t now() const { return now_; }
  std::int64_t arrival(std::size_t k) const { return arrivals_[k]; }
  std::uint64_t tick_seq(std::size_t k) const { return ticks_[k].seq; }
  void finished(std::size_t) {}

  std::optional<double> price(std::size_t contract, std::size_t k) {
    const std::int64_t cost = kernel_.cost_ns(contract, k);
    if (cost < 0) throw ArgumentError("virtual kernel cost must be nonnegative");
    const std::int64_t start = now_;
    const std::int64_t done = start + cost;
    if (kernel_.checkpoint_ns > 0) {
      for (std::int64_t t = start + kernel_.checkpoint_ns; t < done; t += kernel_.checkpoint_ns) {
        if (latest_at(t) != k) {
          now_ = t;
          return std::nullopt;
        }
      }
    }
    now_ = done;
    const auto& c = book_.contracts[contract];
    const SpotPrice spot{ticks_[k].price};
    return kernel_.price ? kernel_.price(c, spot) : black_scholes_price(c, spot, kernel_.params);
  }

private:
  std::size_t latest_at(std::int64_t t) const {
    const auto it = std::upper_bound(arrivals_.begin(), arrivals_.end(), t);
    return static_cast<std::size_t>(it - arrivals_.begin()) - 1;
  }

  std::span<const std::int64_t> arrivals_;
  std::span<const MarketTick> ticks_;
  const ContractBook& book_;
  const VirtualKernel& kernel_;
  std::int64_t now_ = 0;
};

void sort_records(std::vector<PricingRecord>& records) {
  std::sort(records.begin(), records.end(), [](const PricingRecord& a, const PricingRecord& b) {
    return a.tick_seq != b.tick_seq ? a.tick_seq < b.tick_seq : a.contract_index < b.contract_index;
  });
}

SessionMeta stamped_meta(const SessionOptions& options) {
  SessionMeta meta = options.meta;
  meta.workers = options.workers;
  return meta;
}

}  // namespace

SessionLog run_session(TickSource& source, const ContractBook& book, const PricingKernel& kernel,
                       const SessionOptions& options) {
  if (options.workers == 0) throw ArgumentError("worker count must be at least 1");
  book.validate();
  const WorkerAssignment assignment = partition_book(book, options.workers);

  TickBoard board(options.workers);
  const auto start = steady::now();
  std::vector<std::vector<PricingRecord>> buffers(options.workers);
  std::vector<std::int64_t> idle_at(options.workers, 0);

  {
    std::vector<std::jthread> workers;
    workers.reserve(options.workers);
    for (std::size_t w = 0; w < options.workers; ++w) {
      workers.emplace_back([&, w] {
        ThreadEnv env(board, book, kernel, start);
        detail::run_worker(env, static_cast<std::uint32_t>(w), assignment.contracts[w], book, buffers[w]);
        idle_at[w] = env.now();
      });
    }

    while (true) {
      std::optional<MarketTick> tick;
      try {
        tick = source.next();
      } catch (const std::exception& e) {
        board.close(true, e.what());
        break;
      }
      if (!tick) {
        board.close(false, {});
        break;
      }
      board.publish(*tick, since(start));
      if (options.pacing == Pacing::Burst) board.wait_all_finished();
    }
  }

  SessionLog log;
  log.meta = stamped_meta(options);
  log.meta.pacing = options.pacing == Pacing::Burst ? "burst" : "live";
  log.ticks = board.arrivals();
  for (auto& b : buffers) std::move(b.begin(), b.end(), std::back_inserter(log.records));
  sort_records(log.records);
  log.end_ns = *std::max_element(idle_at.begin(), idle_at.end());
  log.stream_error = board.error();
  log.error_message = board.message();
  return log;
}

SessionLog run_virtual_session(std::span<const MarketTick> ticks, const ContractBook& book,
                               const VirtualKernel& kernel, const SessionOptions& options) {
  if (options.workers == 0) throw ArgumentError("worker count must be at least 1");
  if (!kernel.cost_ns) throw ArgumentError("virtual kernel needs a cost function");
  book.validate();
  for (std::size_t i = 1; i < ticks.size(); ++i) {
    if (ticks[i].timestamp_ns < ticks[i - 1].timestamp_ns) throw ArgumentError("tick timestamps must be nondecreasing");
  }
  const WorkerAssignment assignment = partition_book(book, options.workers);

  std::vector<std::int64_t> arrivals;
  arrivals.reserve(ticks.size());
  const std::int64_t origin = ticks.empty() ? 0 : ticks.front().timestamp_ns;
  for (const auto& t : ticks) arrivals.push_back(t.timestamp_ns - origin);

  SessionLog log;
  log.meta = stamped_meta(options);
  log.meta.pacing = "virtual";
  for (std::size_t i = 0; i < ticks.size(); ++i) log.ticks.push_back({ticks[i].seq, arrivals[i], ticks[i].price});

  for (std::size_t w = 0; w < options.workers; ++w) {
    VirtualEnv env(arrivals, ticks, book, kernel);
    detail::run_worker(env, static_cast<std::uint32_t>(w), assignment.contracts[w], book, log.records);
    log.end_ns = std::max(log.end_ns, env.now());
  }
  sort_records(log.records);
  return log;
}

// ---------------------------------------------------------------------------

double worst_core_elapsed(const SessionLog& log, std::uint64_t tick_seq) {
  if (!log.find_tick(tick_seq)) throw ArgumentError("unknown tick seq " + std::to_string(tick_seq));
  std::map<std::uint32_t, std::pair<std::int64_t, std::int64_t>> spans;
  for (const auto& r : log.records) {
    if (r.tick_seq != tick_seq || r.status != PricingStatus::Success) continue;
    auto [it, inserted] = spans.try_emplace(r.worker_id, r.start_ns, r.end_ns);
    if (!inserted) {
      it->second.first = std::min(it->second.first, r.start_ns);
      it->second.second = std::max(it->second.second, r.end_ns);
    }
  }
  std::int64_t worst = 0;
  for (const auto& [worker, span] : spans) worst = std::max(worst, span.second - span.first);
  return static_cast<double>(worst) * 1e-9;
}

StatusCounts count_statuses(const SessionLog& log) {
  StatusCounts c;
  for (const auto& r : log.records) {
    switch (r.status) {
      case PricingStatus::Success: ++c.success; break;
      case PricingStatus::Abandoned: ++c.abandoned; break;
      case PricingStatus::Errored: ++c.errored; break;
    }
  }
  return c;
}

}  // namespace optbench
