#pragma once

#include "spinmult/state.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace spinmult {

struct NamedStateInfo {
    std::string name;
    std::string description;
};

/// Headline states, all exact:
///   singlet, triplet0  two-qubit S=0 and S=1,M=0
///   ghz3, w3           (uuu + ddd)/sqrt2 and the ((1 2) 3) S12=1 S=3/2 M=1/2 state
///   w4, dicke42, w4bar ((1 2)(3 4)) S12=S34=1, S=2 with M = 1, 0, -1
///   ghz4               ((1 2)(3 4)) S12=S34=1, S=1, M=0
///   seq_s1m0           (((1 2) 3) 4) S12=1 S123=3/2 S=1 M=0
const std::vector<NamedStateInfo>& named_states();

/// Throws std::invalid_argument for unknown names.
ExactState named_state(std::string_view name);

}  // namespace spinmult
