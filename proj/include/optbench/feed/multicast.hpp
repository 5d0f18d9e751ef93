#pragma once

#include <cstdint>
#include <string>

namespace optbench {

struct MulticastGroup {
  std::string address = "239.255.0.1";
  std::uint16_t port = 30001;
  std::string interface = "127.0.0.1";  // local interface used to send and join
};

}  // namespace optbench
