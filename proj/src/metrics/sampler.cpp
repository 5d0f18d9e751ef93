#include "optbench/metrics/sampler.hpp"

#include <condition_variable>

namespace optbench {

PowerSampler::PowerSampler(PowerSource& source, Clock::time_point origin, std::chrono::nanoseconds period)
    : source_(source), origin_(origin), period_(period) {}

PowerSampler::~PowerSampler() {
  if (thread_.joinable()) {
    thread_.request_stop();
    thread_.join();
  }
}

void PowerSampler::poll_once() {
  const auto now = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - origin_).count();
  std::lock_guard lock(mutex_);
  auto fresh = source_.poll(now);
  samples_.insert(samples_.end(), fresh.begin(), fresh.end());
}

void PowerSampler::start() {
  poll_once();
  thread_ = std::jthread([this](std::stop_token stop) {
    auto next = Clock::now() + period_;
    std::mutex m;
    std::condition_variable_any cv;
    while (true) {
      std::unique_lock lock(m);
      if (cv.wait_until(lock, stop, next, [] { return false; }) || stop.stop_requested()) break;
      lock.unlock();
      poll_once();
      next += period_;
    }
  });
}

std::vector<PowerSample> PowerSampler::stop() {
  if (thread_.joinable()) {
    thread_.request_stop();
    thread_.join();
  }
  poll_once();
  std::lock_guard lock(mutex_);
  return samples_;
}

std::vector<PowerSample> PowerSampler::snapshot() const {
  std::lock_guard lock(mutex_);
  return samples_;
}

}  // namespace optbench
