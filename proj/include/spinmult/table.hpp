#pragma once

#include "spinmult/coupling.hpp"

#include <string>
#include <string_view>

namespace spinmult {

enum class TableFormat { Text, Json, Latex };

TableFormat parse_table_format(std::string_view text);

/// One row per multiplet member in enumerate_multiplets order, followed by
/// its exact amplitudes in up-first order. Output is byte-stable.
std::string emit_table(const CouplingTree& tree, TableFormat format);

/// LaTeX for a signed coefficient, e.g. "-\sqrt{\frac{2}{3}}".
std::string latex_coefficient(const SignedRadical& r);

}  // namespace spinmult
