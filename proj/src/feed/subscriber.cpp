#include "optbench/feed/subscriber.hpp"

#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <array>
#include <utility>

#include "optbench/errors.hpp"
#include "optbench/feed/wire.hpp"
#include "socket_util.hpp"

namespace optbench {

Subscriber::Subscriber(const MulticastGroup& group) {
  fd_ = ::socket(AF_INET, SOCK_DGRAM, 0);
  if (fd_ < 0) detail::throw_errno("socket");
  auto fail = [this](const char* what) {
    const int saved = errno;
    ::close(fd_);
    fd_ = -1;
    errno = saved;
    detail::throw_errno(what);
  };

  const int on = 1;
  if (::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &on, sizeof on) < 0) fail("SO_REUSEADDR");
  const int rcvbuf = 4 << 20;
  ::setsockopt(fd_, SOL_SOCKET, SO_RCVBUF, &rcvbuf, sizeof rcvbuf);

  sockaddr_in local{};
  local.sin_family = AF_INET;
  local.sin_port = htons(group.port);
  local.sin_addr = detail::parse_ipv4(group.address);
  if (::bind(fd_, reinterpret_cast<const sockaddr*>(&local), sizeof local) < 0) fail("bind");

  ip_mreq membership{};
  membership.imr_multiaddr = detail::parse_ipv4(group.address);
  membership.imr_interface = detail::parse_ipv4(group.interface);
  if (::setsockopt(fd_, IPPROTO_IP, IP_ADD_MEMBERSHIP, &membership, sizeof membership) < 0) {
    fail("IP_ADD_MEMBERSHIP");
  }
}

Subscriber::~Subscriber() {
  if (fd_ >= 0) ::close(fd_);
}

Subscriber::Subscriber(Subscriber&& other) noexcept
    : fd_(std::exchange(other.fd_, -1)), last_seq_(other.last_seq_), stats_(other.stats_) {}

Subscriber& Subscriber::operator=(Subscriber&& other) noexcept {
  if (this != &other) {
    if (fd_ >= 0) ::close(fd_);
    fd_ = std::exchange(other.fd_, -1);
    last_seq_ = other.last_seq_;
    stats_ = other.stats_;
  }
  return *this;
}

std::optional<MarketTick> Subscriber::next(std::chrono::milliseconds timeout) {
  using clock = std::chrono::steady_clock;
  const auto deadline = clock::now() + timeout;
  std::array<std::byte, kMaxDatagramBytes> buf;

  while (true) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - clock::now());
    pollfd pfd{fd_, POLLIN, 0};
    const int ready = ::poll(&pfd, 1, static_cast<int>(std::max<std::int64_t>(left.count(), 0)));
    if (ready < 0) {
      if (errno == EINTR) continue;
      detail::throw_errno("poll");
    }
    if (ready == 0) return std::nullopt;

    const auto n = ::recv(fd_, buf.data(), buf.size(), 0);
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      detail::throw_errno("recv");
    }
    ++stats_.received;
    MarketTick tick;
    try {
      tick = decode_datagram(std::span<const std::byte>(buf.data(), static_cast<std::size_t>(n)));
    } catch (const std::runtime_error&) {
      ++stats_.malformed;
      continue;
    }
    if (last_seq_ && tick.seq <= *last_seq_) {
      ++stats_.out_of_order;
      continue;
    }
    const std::uint64_t expected = last_seq_ ? *last_seq_ + 1 : 0;
    if (tick.seq > expected) stats_.gaps += tick.seq - expected;
    last_seq_ = tick.seq;
    ++stats_.delivered;
    return tick;
  }
}

}  // namespace optbench
