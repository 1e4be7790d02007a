#pragma once

#include <optional>

#include "kfin/number_field.hpp"
#include "kfin/uni_poly.hpp"

namespace kfin {

struct RootOfUnityResult {
  bool is_root = false;
  std::optional<long> order;  // least k with zeta^k == 1
};

// Number of powers that reveal any root of unity of degree at most ell over Q.
long root_of_unity_bound(long ell);

// Searches k = 1..ell^2+2 with ell the degree of zeta's field.
// Throws InvalidInput when zeta is zero.
RootOfUnityResult is_root_of_unity(const FieldElement& zeta);

// True iff some root alpha of q satisfies zeta(alpha)^k == 1 for a k <= k_max,
// detected by gcd(zeta^k - 1 mod q, q) being nonconstant. q need not be
// irreducible. Throws InvalidInput when q is constant.
bool unit_root_probe(const UniPoly& zeta, const UniPoly& q, long k_max);

// Least such k, if any.
std::optional<long> unit_root_probe_order(const UniPoly& zeta, const UniPoly& q, long k_max);

}  // namespace kfin
