#pragma once

#include <span>
#include <string>
#include <vector>

#include "optbench/metrics/report.hpp"

namespace optbench {

struct IsoQosRow {
  std::string label;
  std::string platform;
  double qos = 0.0;
  double energy_j = 0.0;
  double mean_power = 0.0;
  std::optional<double> s_per_opt;
  std::optional<double> j_per_opt;
  double relative_energy = 1.0;   // energy / lowest energy in the table
  double share_of_highest = 1.0;  // energy / highest energy in the table
};

struct IsoQosTable {
  double qos_target = 1.0;
  std::vector<IsoQosRow> rows;           // ascending energy, ties by platform
  std::vector<std::string> excluded;     // one note per filtered report
  std::string diagnostic;                // set when no report meets the target
};

/// `labels` names each report in the output (e.g. its file name); when empty
/// the platform tag is used. Throws ArgumentError for fewer than two reports
/// or a target outside [0, 1].
IsoQosTable iso_qos_compare(std::span<const SessionReport> reports, double qos_target,
                            std::span<const std::string> labels = {});

std::string format_iso_qos_text(const IsoQosTable& table);
std::string format_iso_qos_csv(const IsoQosTable& table);

}  // namespace optbench
