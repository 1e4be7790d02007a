#include "kfin/roots_of_unity.hpp"

#include "kfin/errors.hpp"

namespace kfin {

long root_of_unity_bound(long ell) { return ell * ell + 2; }

RootOfUnityResult is_root_of_unity(const FieldElement& zeta) {
  if (zeta.is_zero()) throw InvalidInput("is_root_of_unity: zero is not a unit");
  const long bound = root_of_unity_bound(zeta.field()->degree());
  FieldElement power = zeta;
  for (long k = 1; k <= bound; ++k) {
    if (power.is_one()) return {true, k};
    power *= zeta;
  }
  return {};
}

std::optional<long> unit_root_probe_order(const UniPoly& zeta, const UniPoly& q, long k_max) {
  if (q.is_constant()) throw InvalidInput("unit_root_probe: modulus must be nonconstant");
  const UniPoly base = divmod(zeta, q).second;
  const UniPoly one = UniPoly::constant(FieldElement(q.field(), 1));
  UniPoly power = base;
  for (long k = 1; k <= k_max; ++k) {
    UniPoly diff = power - one;
    if (diff.is_zero() || !poly_gcd(diff, q).is_constant()) return k;
    power = divmod(power * base, q).second;
  }
  return std::nullopt;
}

bool unit_root_probe(const UniPoly& zeta, const UniPoly& q, long k_max) {
  return unit_root_probe_order(zeta, q, k_max).has_value();
}

}  // namespace kfin
