#pragma once

#include <string>
#include <string_view>

namespace optbench {

enum class OptionKind { Call, Put };

std::string_view to_string(OptionKind kind);
OptionKind parse_option_kind(std::string_view text);

struct OptionContract {
  std::string id;
  OptionKind kind = OptionKind::Call;
  double strike = 0.0;          // currency units, > 0
  double time_to_expiry = 0.0;  // years, > 0

  void validate() const;
};

struct PricingParams {
  double rate = 0.0;        // continuously compounded, per year
  double volatility = 0.0;  // per sqrt(year), > 0 for the numerical kernels
};

struct SpotPrice {
  double value = 0.0;
};

// Throws DomainError when the model inputs cannot produce a price.
void check_model_inputs(const OptionContract& contract, SpotPrice spot, const PricingParams& params);

}  // namespace optbench
