#include "optbench/pricing/box_muller.hpp"

#include <cmath>
#include <numbers>

#include "optbench/errors.hpp"

namespace optbench {

NormalPair box_muller(double u1, double u2) {
  if (!(u1 > 0.0) || u1 > 1.0) throw DomainError("box_muller: u1 must lie in (0, 1]");
  if (!(u2 >= 0.0) || !(u2 < 1.0)) throw DomainError("box_muller: u2 must lie in [0, 1)");
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace optbench
