#include "optbench/pricing/types.hpp"

#include <cmath>

#include "optbench/errors.hpp"

namespace optbench {

std::string_view to_string(OptionKind kind) {
  return kind == OptionKind::Call ? "call" : "put";
}

OptionKind parse_option_kind(std::string_view text) {
  if (text == "call" || text == "Call" || text == "C" || text == "c") return OptionKind::Call;
  if (text == "put" || text == "Put" || text == "P" || text == "p") return OptionKind::Put;
  throw ValidationError("unknown option kind '" + std::string(text) + "'");
}

void OptionContract::validate() const {
  if (!(strike > 0.0) || !std::isfinite(strike)) {
    throw ValidationError("contract " + id + ": strike must be positive");
  }
  if (!(time_to_expiry > 0.0) || !std::isfinite(time_to_expiry)) {
    throw ValidationError("contract " + id + ": time to expiry must be positive");
  }
}

void check_model_inputs(const OptionContract& contract, SpotPrice spot, const PricingParams& params) {
  if (!(params.volatility > 0.0)) throw DomainError("volatility must be positive");
  if (!(contract.time_to_expiry > 0.0)) throw DomainError("time to expiry must be positive");
  if (!(contract.strike > 0.0)) throw DomainError("strike must be positive");
  if (!(spot.value > 0.0)) throw DomainError("spot price must be positive");
  if (!std::isfinite(params.rate) || !std::isfinite(params.volatility) ||
      !std::isfinite(spot.value) || !std::isfinite(contract.strike) ||
      !std::isfinite(contract.time_to_expiry)) {
    throw DomainError("model inputs must be finite");
  }
}

}  // namespace optbench
