#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "optbench/feed/tick.hpp"

namespace optbench {

struct TraceHeader {
  int version = 1;
  std::vector<std::string> symbols;  // sorted, unique
  std::string session_start;         // ISO-8601 wall clock
};

/// A recorded session. Row i carries seq i.
///
/// File layout:
///   #optbench-trace v1 <symbol-count> <wallclock-iso8601>
///   timestamp_ns,symbol,price
///   ...
struct TickTrace {
  TraceHeader header;
  std::vector<MarketTick> ticks;

  /// Recomputes header.symbols from the rows.
  void refresh_symbols();
  /// Throws ValidationError on decreasing timestamps, duplicate seq or a
  /// symbol table that disagrees with the rows.
  void validate() const;

  friend bool operator==(const TickTrace& a, const TickTrace& b) {
    return a.header.version == b.header.version && a.header.symbols == b.header.symbols &&
           a.header.session_start == b.header.session_start && a.ticks == b.ticks;
  }
};

void write_trace(std::ostream& out, const TickTrace& trace);
void write_trace(const std::filesystem::path& path, const TickTrace& trace);

TickTrace read_trace(std::istream& in);
TickTrace read_trace(const std::filesystem::path& path);

/// Current UTC wall clock formatted as YYYY-MM-DDThh:mm:ssZ.
std::string wallclock_iso8601();

}  // namespace optbench
