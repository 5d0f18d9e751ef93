#pragma once

namespace optbench {

/// Per-level lattice factors. up * down == 1; disc_p_up and disc_p_down are
/// the discounted risk-neutral weights of the up and down successors.
struct BtCoefficients {
  double up = 1.0;
  double down = 1.0;
  double disc_p_up = 0.0;
  double disc_p_down = 0.0;
  double dt = 0.0;
};

}  // namespace optbench
