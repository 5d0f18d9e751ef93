#pragma once

#include <arpa/inet.h>
#include <netinet/in.h>

#include <cerrno>
#include <cstring>
#include <string>

#include "optbench/errors.hpp"

namespace optbench::detail {

inline in_addr parse_ipv4(const std::string& text) {
  in_addr addr{};
  if (inet_pton(AF_INET, text.c_str(), &addr) != 1) throw IoError("invalid IPv4 address '" + text + "'");
  return addr;
}

[[noreturn]] inline void throw_errno(const std::string& what) {
  throw IoError(what + ": " + std::strerror(errno));
}

}  // namespace optbench::detail
