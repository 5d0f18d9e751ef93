#include "optbench/feed/replay.hpp"

#include <sys/socket.h>
#include <unistd.h>

#include <cmath>
#include <thread>

#include "optbench/errors.hpp"
#include "optbench/feed/wire.hpp"
#include "socket_util.hpp"

namespace optbench {

namespace {

class SenderSocket {
public:
  explicit SenderSocket(const MulticastGroup& group) {
    fd_ = ::socket(AF_INET, SOCK_DGRAM, 0);
    if (fd_ < 0) detail::throw_errno("socket");
    const in_addr iface = detail::parse_ipv4(group.interface);
    if (::setsockopt(fd_, IPPROTO_IP, IP_MULTICAST_IF, &iface, sizeof iface) < 0) {
      close();
      detail::throw_errno("IP_MULTICAST_IF");
    }
    const unsigned char loop = 1, ttl = 1;
    ::setsockopt(fd_, IPPROTO_IP, IP_MULTICAST_LOOP, &loop, sizeof loop);
    ::setsockopt(fd_, IPPROTO_IP, IP_MULTICAST_TTL, &ttl, sizeof ttl);
    dest_.sin_family = AF_INET;
    dest_.sin_port = htons(group.port);
    dest_.sin_addr = detail::parse_ipv4(group.address);
  }
  ~SenderSocket() { close(); }
  SenderSocket(const SenderSocket&) = delete;
  SenderSocket& operator=(const SenderSocket&) = delete;

  void send(const std::string& payload) {
    const auto n = ::sendto(fd_, payload.data(), payload.size(), 0, reinterpret_cast<const sockaddr*>(&dest_),
                            sizeof dest_);
    if (n < 0) detail::throw_errno("sendto");
  }

private:
  void close() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

  int fd_ = -1;
  sockaddr_in dest_{};
};

}  // namespace

ReplayStats replay(const TickTrace& trace, const ReplayOptions& options) {
  if (trace.ticks.empty()) throw ArgumentError("replay: trace is empty");
  if (!(options.speed > 0.0) || !std::isfinite(options.speed)) throw ArgumentError("replay: speed must be positive");

  SenderSocket socket(options.group);
  ReplayStats stats;
  stats.send_offsets_ns.reserve(trace.ticks.size());
  stats.scheduled_offsets_ns.reserve(trace.ticks.size());

  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const std::int64_t origin_ns = trace.ticks.front().timestamp_ns;

  for (const auto& tick : trace.ticks) {
    if (options.stop && options.stop->load(std::memory_order_relaxed)) break;
    std::int64_t scheduled = 0;
    if (!options.burst) {
      scheduled = std::llround(static_cast<double>(tick.timestamp_ns - origin_ns) / options.speed);
      std::this_thread::sleep_until(start + std::chrono::nanoseconds(scheduled));
    }
    socket.send(encode_datagram(tick));
    const std::int64_t actual =
        std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count();
    stats.send_offsets_ns.push_back(actual);
    stats.scheduled_offsets_ns.push_back(scheduled);
    ++stats.sent;
    if (!options.burst) {
      const std::int64_t lateness = actual - scheduled;
      stats.max_lateness_ns = std::max(stats.max_lateness_ns, lateness);
      if (lateness > options.jitter_budget.count()) ++stats.late_beyond_budget;
    }
  }
  return stats;
}

}  // namespace optbench
