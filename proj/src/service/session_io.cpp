#include "optbench/service/session_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "optbench/errors.hpp"

namespace optbench {

using nlohmann::json;

namespace {

json to_json(const PricingRecord& r) {
  json j{{"contract_index", r.contract_index}, {"contract_id", r.contract_id}, {"tick_seq", r.tick_seq},
         {"start_ns", r.start_ns},           {"end_ns", r.end_ns},           {"worker_id", r.worker_id},
         {"status", to_string(r.status)}};
  if (r.price) j["price"] = *r.price;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

PricingRecord record_from_json(const json& j) {
  PricingRecord r;
  r.contract_index = j.at("contract_index").get<std::size_t>();
  r.contract_id = j.at("contract_id").get<std::string>();
  r.tick_seq = j.at("tick_seq").get<std::uint64_t>();
  r.start_ns = j.at("start_ns").get<std::int64_t>();
  r.end_ns = j.at("end_ns").get<std::int64_t>();
  r.worker_id = j.at("worker_id").get<std::uint32_t>();
  r.status = parse_pricing_status(j.at("status").get<std::string>());
  if (j.contains("price")) r.price = j["price"].get<double>();
  if (j.contains("error")) r.error = j["error"].get<std::string>();
  if (r.status == PricingStatus::Success && !r.price) throw ValidationError("success record without price");
  if (r.status != PricingStatus::Success && r.price) throw ValidationError("non-success record with price");
  return r;
}

json meta_to_json(const SessionMeta& m) {
  return json{{"model", m.model},         {"n", m.n},
              {"variant", m.variant},     {"precision", m.precision},
              {"governor", m.governor},   {"platform", m.platform},
              {"workers", m.workers},     {"pacing", m.pacing},
              {"scheduler", m.scheduler}, {"scaleout", m.scaleout},
              {"seed", m.seed},           {"rate", m.rate},
              {"volatility", m.volatility}};
}

SessionMeta meta_from_json(const json& j) {
  SessionMeta m;
  m.model = j.at("model").get<std::string>();
  m.n = j.at("n").get<std::uint64_t>();
  m.variant = j.at("variant").get<std::string>();
  m.precision = j.at("precision").get<std::string>();
  m.governor = j.at("governor").get<std::string>();
  m.platform = j.at("platform").get<std::string>();
  m.workers = j.at("workers").get<std::size_t>();
  m.pacing = j.at("pacing").get<std::string>();
  m.scheduler = j.at("scheduler").get<std::string>();
  m.scaleout = j.at("scaleout").get<std::string>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.rate = j.at("rate").get<double>();
  m.volatility = j.at("volatility").get<double>();
  return m;
}

}  // namespace

void write_records_jsonl(std::ostream& out, const std::vector<PricingRecord>& records) {
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

std::vector<PricingRecord> read_records_jsonl(std::istream& in) {
  std::vector<PricingRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      records.push_back(record_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw ParseError(line_number, e.what());
    } catch (const ValidationError& e) {
      throw ParseError(line_number, e.what());
    }
  }
  return records;
}

void write_session_meta(std::ostream& out, const SessionLog& log) {
  json ticks = json::array();
  for (const auto& t : log.ticks) ticks.push_back({{"seq", t.seq}, {"arrival_ns", t.arrival_ns}, {"spot", t.spot}});
  json j{{"meta", meta_to_json(log.meta)},
         {"ticks", std::move(ticks)},
         {"end_ns", log.end_ns},
         {"stream_error", log.stream_error},
         {"error_message", log.error_message}};
  out << j.dump(2) << '\n';
}

SessionLog read_session_meta(std::istream& in) {
  try {
    const json j = json::parse(in);
    SessionLog log;
    log.meta = meta_from_json(j.at("meta"));
    for (const auto& t : j.at("ticks")) {
      log.ticks.push_back(
          {t.at("seq").get<std::uint64_t>(), t.at("arrival_ns").get<std::int64_t>(), t.at("spot").get<double>()});
    }
    log.end_ns = j.at("end_ns").get<std::int64_t>();
    log.stream_error = j.at("stream_error").get<bool>();
    log.error_message = j.at("error_message").get<std::string>();
    return log;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("session header: ") + e.what());
  }
}

std::filesystem::path session_meta_path(const std::filesystem::path& records_path) {
  std::filesystem::path p = records_path;
  p.replace_extension(".meta.json");
  return p;
}

void write_session_log(const SessionLog& log, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream records(path);
  if (!records) throw IoError("cannot write " + path.string());
  write_records_jsonl(records, log.records);
  std::ofstream meta(session_meta_path(path));
  if (!meta) throw IoError("cannot write " + session_meta_path(path).string());
  write_session_meta(meta, log);
  if (!records.flush() || !meta.flush()) throw IoError("write failed for " + path.string());
}

SessionLog read_session_log(const std::filesystem::path& path) {
  std::ifstream meta(session_meta_path(path));
  if (!meta) throw IoError("cannot read " + session_meta_path(path).string());
  SessionLog log = read_session_meta(meta);
  std::ifstream records(path);
  if (!records) throw IoError("cannot read " + path.string());
  log.records = read_records_jsonl(records);
  return log;
}

}  // namespace optbench
