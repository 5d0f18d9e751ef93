#include "optbench/metrics/iso_qos.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "optbench/errors.hpp"

namespace optbench {

IsoQosTable iso_qos_compare(std::span<const SessionReport> reports, double qos_target,
                            std::span<const std::string> labels) {
  if (reports.size() < 2) throw ArgumentError("iso-QoS comparison needs at least two reports");
  if (!(qos_target >= 0.0 && qos_target <= 1.0)) throw ArgumentError("QoS target must be in [0, 1]");
  if (!labels.empty() && labels.size() != reports.size()) throw ArgumentError("one label per report");

  IsoQosTable table;
  table.qos_target = qos_target;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    const std::string label = labels.empty() ? r.platform : labels[i];
    if (!r.qos || *r.qos < qos_target) {
      table.excluded.push_back(label + ": qos " + (r.qos ? format_number(*r.qos) : std::string("absent")) +
                               " below target " + format_number(qos_target));
      continue;
    }
    table.rows.push_back({label, r.platform, *r.qos, r.energy_j, r.mean_power, r.s_per_opt, r.j_per_opt, 1.0});
  }
  std::stable_sort(table.rows.begin(), table.rows.end(), [](const IsoQosRow& a, const IsoQosRow& b) {
    if (a.energy_j != b.energy_j) return a.energy_j < b.energy_j;
    return a.platform < b.platform;
  });
  if (table.rows.empty()) {
    table.diagnostic = "no report meets QoS target " + format_number(qos_target);
    return table;
  }
  const double lowest = table.rows.front().energy_j;
  const double highest = table.rows.back().energy_j;
  for (auto& row : table.rows) {
    row.share_of_highest = highest > 0.0 ? row.energy_j / highest : 1.0;
    if (lowest > 0.0) {
      row.relative_energy = row.energy_j / lowest;
    } else {
      row.relative_energy = row.energy_j == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    }
  }
  return table;
}

std::string format_iso_qos_text(const IsoQosTable& table) {
  std::string out = "iso-QoS comparison, target qos >= " + format_number(table.qos_target) + "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-4s %-24s %-12s %8s %14s %10s %10s\n", "rank", "label", "platform", "qos",
                "energy_j", "relative", "of_highest");
  out += line;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    std::snprintf(line, sizeof line, "%-4zu %-24s %-12s %8.4f %14.6g %10.4f %9.1f%%\n", i + 1, r.label.c_str(),
                  r.platform.c_str(), r.qos, r.energy_j, r.relative_energy, 100.0 * r.share_of_highest);
    out += line;
  }
  for (const auto& note : table.excluded) out += "excluded: " + note + "\n";
  if (!table.diagnostic.empty()) out += table.diagnostic + "\n";
  return out;
}

std::string format_iso_qos_csv(const IsoQosTable& table) {
  std::string out =
      "rank,label,platform,qos,energy_j,mean_power_w,s_per_opt,j_per_opt,relative_energy,share_of_highest\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    out += std::to_string(i + 1) + ',' + r.label + ',' + r.platform + ',' + format_number(r.qos) + ',' +
           format_number(r.energy_j) + ',' + format_number(r.mean_power) + ',' + format_number(r.s_per_opt) + ',' +
           format_number(r.j_per_opt) + ',' + format_number(r.relative_energy) + ',' +
           format_number(r.share_of_highest) + '\n';
  }
  return out;
}

}  // namespace optbench
