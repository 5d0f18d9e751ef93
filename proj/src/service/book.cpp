#include "optbench/service/book.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "optbench/errors.hpp"

namespace optbench {

namespace {

constexpr std::string_view kHeader = "id,kind,strike,expiry_years";

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    out.push_back(line.substr(pos, comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

double parse_number(std::string_view field, std::size_t line, const char* what) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || end != field.data() + field.size() || field.empty()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(field) + "'");
  }
  return v;
}

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

void ContractBook::validate() const {
  if (contracts.empty()) throw ValidationError("contract book is empty");
  std::set<std::string> ids;
  for (const auto& c : contracts) {
    c.validate();
    if (!ids.insert(c.id).second) throw ValidationError("duplicate contract id '" + c.id + "'");
  }
}

ContractBook read_book(std::istream& in) {
  ContractBook book;
  std::string line;
  std::size_t line_number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kHeader) throw ParseError(line_number, "expected header '" + std::string(kHeader) + "'");
      header_seen = true;
      continue;
    }
    const auto fields = split(line);
    if (fields.size() != 4) throw ParseError(line_number, "expected 4 fields");
    OptionContract c;
    c.id = std::string(fields[0]);
    if (c.id.empty()) throw ParseError(line_number, "empty contract id");
    try {
      c.kind = parse_option_kind(fields[1]);
    } catch (const ValidationError& e) {
      throw ParseError(line_number, e.what());
    }
    c.strike = parse_number(fields[2], line_number, "strike");
    c.time_to_expiry = parse_number(fields[3], line_number, "expiry");
    book.contracts.push_back(std::move(c));
  }
  if (!header_seen) throw ParseError(1, "empty book file");
  book.validate();
  return book;
}

ContractBook read_book(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open book " + path.string());
  return read_book(in);
}

void write_book(std::ostream& out, const ContractBook& book) {
  out << kHeader << '\n';
  for (const auto& c : book.contracts) {
    out << c.id << ',' << to_string(c.kind) << ',' << format_number(c.strike) << ','
        << format_number(c.time_to_expiry) << '\n';
  }
  if (!out) throw IoError("failed writing contract book");
}

void write_book(const std::filesystem::path& path, const ContractBook& book) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_book(out, book);
}

ContractBook generate_book(const BookSpec& spec) {
  if (spec.size == 0) throw ArgumentError("book size must be at least 1");
  if (!(spec.strike_low > 0.0) || !(spec.strike_high >= spec.strike_low) || !(spec.strike_step > 0.0)) {
    throw ArgumentError("strike grid must satisfy 0 < low <= high and step > 0");
  }
  if (spec.expiries.empty()) throw ArgumentError("at least one expiry is required");
  for (double t : spec.expiries) {
    if (!(t > 0.0)) throw ArgumentError("expiries must be positive");
  }

  std::vector<double> strikes;
  const auto steps = static_cast<std::size_t>(std::floor((spec.strike_high - spec.strike_low) / spec.strike_step + 1e-9));
  for (std::size_t i = 0; i <= steps; ++i) strikes.push_back(spec.strike_low + spec.strike_step * static_cast<double>(i));

  ContractBook book;
  book.contracts.reserve(spec.size);
  std::size_t cycle = 0;
  while (book.contracts.size() < spec.size) {
    for (double t : spec.expiries) {
      for (double k : strikes) {
        for (OptionKind kind : {OptionKind::Call, OptionKind::Put}) {
          if (book.contracts.size() == spec.size) break;
          std::ostringstream id;
          id << (kind == OptionKind::Call ? 'C' : 'P') << format_number(k) << '_' << format_number(t);
          if (cycle > 0) id << '_' << cycle;
          book.contracts.push_back(OptionContract{id.str(), kind, k, t});
        }
      }
    }
    ++cycle;
  }
  return book;
}

WorkerAssignment partition_book(const ContractBook& book, std::size_t workers) {
  if (workers == 0) throw ArgumentError("worker count must be at least 1");
  WorkerAssignment a;
  a.contracts.resize(workers);
  const std::size_t n = book.size();
  const std::size_t base = n / workers;
  const std::size_t extra = n % workers;
  std::size_t next = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t load = base + (w < extra ? 1 : 0);
    for (std::size_t k = 0; k < load; ++k) a.contracts[w].push_back(next++);
  }
  return a;
}

}  // namespace optbench
