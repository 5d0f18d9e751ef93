#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "optbench/feed/tick.hpp"
#include "optbench/pricing/cancel.hpp"
#include "optbench/pricing/types.hpp"
#include "optbench/service/book.hpp"
#include "optbench/vecmath/lane_config.hpp"

namespace optbench {

enum class PricingStatus { Success, Abandoned, Errored };

std::string_view to_string(PricingStatus status);
PricingStatus parse_pricing_status(std::string_view text);

struct PricingRecord {
  std::size_t contract_index = 0;
  std::string contract_id;
  std::uint64_t tick_seq = 0;
  std::int64_t start_ns = 0;  // monotonic, since session start
  std::int64_t end_ns = 0;
  std::uint32_t worker_id = 0;
  PricingStatus status = PricingStatus::Abandoned;
  std::optional<double> price;  // present iff Success
  std::string error;            // set iff Errored

  friend bool operator==(const PricingRecord&, const PricingRecord&) = default;
};

struct TickArrival {
  std::uint64_t seq = 0;
  std::int64_t arrival_ns = 0;
  double spot = 0.0;

  friend bool operator==(const TickArrival&, const TickArrival&) = default;
};

enum class ModelKind { MonteCarlo, BinomialTree, Mock };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view text);

/// Run metadata carried into the log and the reports.
struct SessionMeta {
  std::string model = "MC";
  std::uint64_t n = 0;
  std::string variant = "NOVECT";
  std::string precision = "64";
  std::string governor = "unknown";
  std::string platform = "1x1x1";
  std::size_t workers = 1;
  std::string pacing = "live";         // live | burst | virtual
  std::string scheduler = "static-fifo";
  std::string scaleout = "none";       // none | split | replicate
  std::uint64_t seed = 0;
  double rate = 0.0;
  double volatility = 0.0;

  friend bool operator==(const SessionMeta&, const SessionMeta&) = default;
};

struct SessionLog {
  SessionMeta meta;
  std::vector<TickArrival> ticks;      // in arrival order
  std::vector<PricingRecord> records;  // sorted by (tick, contract index)
  std::int64_t end_ns = 0;             // when the last worker went idle
  bool stream_error = false;
  std::string error_message;

  const TickArrival* find_tick(std::uint64_t seq) const;
};

// ---------------------------------------------------------------------------
// Kernels

/// Prices one contract for one tick; returns nullopt when `cancelled` fires.
/// Exceptions mark the record Errored.
using PricingKernel = std::function<std::optional<double>(const OptionContract& contract, std::size_t contract_index,
                                                          const MarketTick& tick, const CancelCheck& cancelled)>;

struct ModelConfig {
  ModelKind kind = ModelKind::MonteCarlo;
  std::uint64_t n = 1'000'000;  // MC draws or BT steps
  KernelVariant variant;
  Precision precision = Precision::Double;
  bool screening = true;
  std::uint64_t seed = 5489;
  PricingParams params{0.02, 0.25};
};

/// MC or BT kernel. Each (tick, contract) pricing seeds its generator from
/// (seed, tick seq, contract index) so results do not depend on scheduling.
PricingKernel make_model_kernel(const ModelConfig& cfg);

std::uint64_t pricing_seed(std::uint64_t base, std::uint64_t tick_seq, std::size_t contract_index);

// ---------------------------------------------------------------------------
// Tick intake

/// Pull-based tick stream. next() blocks until a tick is available and
/// returns nullopt at end of stream; it throws on stream failure.
class TickSource {
public:
  virtual ~TickSource() = default;
  virtual std::optional<MarketTick> next() = 0;
};

/// Delivers ticks from memory. With `paced`, tick i is released at
/// start + (t_i - t_0) / speed; otherwise immediately.
class MemoryTickSource : public TickSource {
public:
  MemoryTickSource(std::vector<MarketTick> ticks, bool paced, double speed = 1.0);
  std::optional<MarketTick> next() override;

private:
  std::vector<MarketTick> ticks_;
  bool paced_;
  double speed_;
  std::size_t next_ = 0;
  std::optional<std::int64_t> start_ns_;
};

enum class Pacing {
  Live,   // ticks enter as the source yields them
  Burst,  // the next tick is pulled only after every worker finished the current one
};

struct SessionOptions {
  std::size_t workers = 1;
  Pacing pacing = Pacing::Live;
  SessionMeta meta;
};

/// Runs the event-driven pricer on real threads. An intake thread publishes
/// each tick; workers own a static slice of the book and price it in order.
/// When a newer tick arrives, unstarted work for older ticks is Abandoned
/// with start = end = the newer tick's arrival, and an in-flight kernel is
/// Abandoned at its next checkpoint (or on completion if it finishes first).
SessionLog run_session(TickSource& source, const ContractBook& book, const PricingKernel& kernel,
                       const SessionOptions& options);

// ---------------------------------------------------------------------------
// Virtual time

/// Deterministic stand-in kernel for virtual-time runs.
struct VirtualKernel {
  /// Cost in virtual ns of pricing `contract_index` for tick number `tick_index`.
  std::function<std::int64_t(std::size_t contract_index, std::size_t tick_index)> cost_ns;
  /// Distance between cancellation checkpoints inside one pricing.
  std::int64_t checkpoint_ns = 1'000'000;
  /// Price reported on success; defaults to Black-Scholes when empty. May
  /// throw to exercise the Errored path.
  std::function<double(const OptionContract&, SpotPrice)> price;
  PricingParams params{0.02, 0.25};
};

/// Same worker logic as run_session, driven by a virtual clock: tick i
/// arrives at its timestamp, pricing a contract costs exactly cost_ns, and
/// cancellation is observed at start + k * checkpoint_ns (k >= 1, strictly
/// before completion). A tick arriving at the same instant a pricing
/// completes supersedes it. Output is reproducible record for record.
SessionLog run_virtual_session(std::span<const MarketTick> ticks, const ContractBook& book,
                               const VirtualKernel& kernel, const SessionOptions& options);

// ---------------------------------------------------------------------------

/// Max over workers of (last end - first start) across the tick's Success
/// records; 0 when none succeeded. Throws ArgumentError for an unknown seq.
double worst_core_elapsed(const SessionLog& log, std::uint64_t tick_seq);

struct StatusCounts {
  std::size_t success = 0;
  std::size_t abandoned = 0;
  std::size_t errored = 0;
  std::size_t total() const noexcept { return success + abandoned + errored; }
};

StatusCounts count_statuses(const SessionLog& log);

}  // namespace optbench
