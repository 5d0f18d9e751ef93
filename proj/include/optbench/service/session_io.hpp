#pragma once

#include <filesystem>
#include <iosfwd>

#include "optbench/service/session.hpp"

namespace optbench {

/// Records as JSON lines, one PricingRecord per line.
void write_records_jsonl(std::ostream& out, const std::vector<PricingRecord>& records);
std::vector<PricingRecord> read_records_jsonl(std::istream& in);

/// Metadata header: run metadata, tick arrivals, end time and error flag.
void write_session_meta(std::ostream& out, const SessionLog& log);
SessionLog read_session_meta(std::istream& in);

/// Writes `path` (JSON lines) and the header next to it.
void write_session_log(const SessionLog& log, const std::filesystem::path& path);
SessionLog read_session_log(const std::filesystem::path& path);

std::filesystem::path session_meta_path(const std::filesystem::path& records_path);

}  // namespace optbench
