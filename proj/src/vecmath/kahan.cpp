#include "optbench/vecmath/kahan.hpp"

namespace optbench {

double kahan_sum(std::span<const double> values) {
  KahanAccumulator acc;
  for (double v : values) acc.add(v);
  return acc.sum();
}

double kahan_sum(std::span<const float> values) {
  KahanAccumulator acc;
  for (float v : values) acc.add(v);
  return acc.sum();
}

}  // namespace optbench
