#pragma once

#include <span>

namespace optbench {

/// Compensated (Kahan) running sum. Must not be compiled with
/// -ffast-math, which folds the compensation term away.
class KahanAccumulator {
public:
  void add(double x) noexcept {
    const double y = x - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }

  double sum() const noexcept { return sum_; }

private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double kahan_sum(std::span<const double> values);
double kahan_sum(std::span<const float> values);

}  // namespace optbench
