#pragma once

#include <chrono>
#include <mutex>
#include <stop_token>
#include <thread>
#include <vector>

#include "optbench/metrics/power.hpp"

namespace optbench {

/// Polls a source on its own thread into an append-only buffer. Timestamps
/// are nanoseconds since `origin`. A reading is taken at start() and stop()
/// so short runs still bracket the window.
class PowerSampler {
public:
  using Clock = std::chrono::steady_clock;

  PowerSampler(PowerSource& source, Clock::time_point origin,
               std::chrono::nanoseconds period = std::chrono::milliseconds(100));
  ~PowerSampler();
  PowerSampler(const PowerSampler&) = delete;
  PowerSampler& operator=(const PowerSampler&) = delete;

  void start();
  std::vector<PowerSample> stop();
  std::vector<PowerSample> snapshot() const;

private:
  void poll_once();

  PowerSource& source_;
  Clock::time_point origin_;
  std::chrono::nanoseconds period_;
  mutable std::mutex mutex_;
  std::vector<PowerSample> samples_;
  std::jthread thread_;
};

}  // namespace optbench
