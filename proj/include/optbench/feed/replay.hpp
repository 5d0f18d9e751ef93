#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <vector>

#include "optbench/feed/multicast.hpp"
#include "optbench/feed/trace.hpp"

namespace optbench {

struct ReplayOptions {
  MulticastGroup group;
  double speed = 1.0;  // > 0; tick i leaves at start + t_i / speed
  bool burst = false;  // ignore timestamps, send back to back
  std::chrono::nanoseconds jitter_budget = std::chrono::milliseconds(5);
  const std::atomic<bool>* stop = nullptr;  // optional early stop
};

struct ReplayStats {
  std::size_t sent = 0;
  std::int64_t max_lateness_ns = 0;
  std::size_t late_beyond_budget = 0;  // warning counter, never a failure
  std::vector<std::int64_t> send_offsets_ns;     // actual send time - replay start
  std::vector<std::int64_t> scheduled_offsets_ns;
};

/// Transmits every tick of `trace` as one datagram to the group, sleeping on
/// an absolute schedule so lateness does not accumulate. Throws
/// ArgumentError for an empty trace or non-positive speed, IoError on
/// socket failure.
ReplayStats replay(const TickTrace& trace, const ReplayOptions& options);

}  // namespace optbench
