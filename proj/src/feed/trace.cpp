#include "optbench/feed/trace.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include "optbench/errors.hpp"

namespace optbench {

namespace {

constexpr std::string_view kMagic = "#optbench-trace";

}  // namespace

void TickTrace::refresh_symbols() {
  std::set<std::string> unique;
  for (const auto& t : ticks) unique.insert(t.symbol);
  header.symbols.assign(unique.begin(), unique.end());
}

void TickTrace::validate() const {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < ticks.size(); ++i) {
    const auto& t = ticks[i];
    if (!(t.price > 0.0)) throw ValidationError("tick " + std::to_string(i) + ": price must be positive");
    if (i > 0 && t.timestamp_ns < ticks[i - 1].timestamp_ns) {
      throw ValidationError("tick " + std::to_string(i) + ": timestamps must be nondecreasing");
    }
    if (i > 0 && t.seq <= ticks[i - 1].seq) throw ValidationError("tick " + std::to_string(i) + ": seq not increasing");
    seen.insert(t.symbol);
  }
  if (std::vector<std::string>(seen.begin(), seen.end()) != header.symbols) {
    throw ValidationError("trace header symbol table does not match the rows");
  }
}

void write_trace(std::ostream& out, const TickTrace& trace) {
  out << kMagic << " v" << trace.header.version << ' ' << trace.header.symbols.size() << ' '
      << trace.header.session_start << '\n';
  for (const auto& t : trace.ticks) out << format_tick_line(t) << '\n';
  if (!out) throw IoError("failed writing trace");
}

void write_trace(const std::filesystem::path& path, const TickTrace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_trace(out, trace);
}

TickTrace read_trace(std::istream& in) {
  TickTrace trace;
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "empty trace file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    std::istringstream hdr(line);
    std::string magic, version;
    std::size_t symbol_count = 0;
    if (!(hdr >> magic >> version >> symbol_count) || magic != kMagic || version.size() < 2 || version[0] != 'v') {
      throw ParseError(1, "expected '#optbench-trace v1 <symbol-count> <wallclock>' header");
    }
    try {
      trace.header.version = std::stoi(version.substr(1));
    } catch (const std::exception&) {
      throw ParseError(1, "bad trace version '" + version + "'");
    }
    if (trace.header.version != 1) throw ParseError(1, "unsupported trace version " + version);
    hdr >> trace.header.session_start;
    trace.header.symbols.resize(symbol_count);
  }

  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line == "\r") continue;
    trace.ticks.push_back(parse_tick_line(line, line_number, trace.ticks.size()));
  }

  const std::size_t declared = trace.header.symbols.size();
  trace.refresh_symbols();
  if (trace.header.symbols.size() != declared) {
    throw ValidationError("header declares " + std::to_string(declared) + " symbols, rows contain " +
                          std::to_string(trace.header.symbols.size()));
  }
  trace.validate();
  return trace;
}

TickTrace read_trace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open trace " + path.string());
  return read_trace(in);
}

std::string wallclock_iso8601() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace optbench
