#pragma once

#include <optional>
#include <vector>

#include "kfin/uni_poly.hpp"

namespace kfin::detail {

// Every root in F of a squarefree p over a field of degree >= 2, or nullopt
// when no usable prime was found within the search limits.
std::optional<std::vector<FieldElement>> number_field_roots(const UniPoly& p);

}  // namespace kfin::detail
