#pragma once

#include "spinmult/exact_radical.hpp"
#include "spinmult/state.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace spinmult {

/// Either flavor of a qubit state.
using StateVector = std::variant<ExactState, NumericState>;

NumericState to_numeric(const StateVector& state);

/// {"sign": -1|0|1, "num": "p", "den": "q"}
nlohmann::json radical_to_json(const SignedRadical& r);
SignedRadical radical_from_json(const nlohmann::json& j);

inline constexpr double kNumericNormTolerance = 1e-12;

/// Parses a state file. Rejects malformed JSON, bad or duplicate configs,
/// stored zeros and states that are not normalized; never renormalizes.
StateVector parse_state_file(std::string_view text);

/// Canonical state file: configs in up-first order, two-space indent.
std::string emit_state_file(const ExactState& state);
std::string emit_state_file(const NumericState& state);
std::string emit_state_file(const StateVector& state);

}  // namespace spinmult
