#pragma once

#include <vector>

#include "kfin/rational.hpp"

namespace kfin {

// Distinct rational roots of a univariate polynomial over Q, ascending.
// Coefficients are constant term first. The zero polynomial has no
// well-defined root set and is rejected with InvalidInput.
std::vector<Rational> rational_roots_of(const std::vector<Rational>& coeffs);
std::vector<Rational> rational_roots_of(const std::vector<Integer>& coeffs);

}  // namespace kfin
