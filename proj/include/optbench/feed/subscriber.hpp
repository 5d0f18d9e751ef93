#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

#include "optbench/feed/multicast.hpp"
#include "optbench/feed/tick.hpp"

namespace optbench {

struct SubscriberStats {
  std::size_t received = 0;      // datagrams read from the socket
  std::size_t delivered = 0;     // ticks handed to the consumer
  std::size_t gaps = 0;          // sequence numbers skipped
  std::size_t malformed = 0;     // undecodable datagrams, dropped
  std::size_t out_of_order = 0;  // seq at or below the last delivered, dropped
};

/// Joins a multicast group and yields ticks in sequence order. UDP is lossy
/// and there is no retransmission; missing sequence numbers are counted as
/// gaps. Move-only.
class Subscriber {
public:
  explicit Subscriber(const MulticastGroup& group);
  ~Subscriber();
  Subscriber(Subscriber&& other) noexcept;
  Subscriber& operator=(Subscriber&& other) noexcept;
  Subscriber(const Subscriber&) = delete;
  Subscriber& operator=(const Subscriber&) = delete;

  /// Waits up to `timeout` for the next valid tick.
  std::optional<MarketTick> next(std::chrono::milliseconds timeout);

  const SubscriberStats& stats() const noexcept { return stats_; }

private:
  int fd_ = -1;
  std::optional<std::uint64_t> last_seq_;
  SubscriberStats stats_;
};

}  // namespace optbench
