#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kfin/decision.hpp"
#include "kfin/form_space.hpp"
#include "kfin/multi_poly.hpp"
#include "kfin/singularities.hpp"

namespace kfin {

// The eight families of representative genus-2 curves of degree n+2 in P^n.
enum class StratumId {
  Tacnode,
  Cusp345,
  Cusp25,
  CuspWithSmoothBranch,
  OrdinaryTriplePoint,
  TwoCusps,
  CuspAndNode,
  TwoNodes,
};

inline constexpr StratumId kAllStrata[] = {
    StratumId::Tacnode,     StratumId::Cusp345,  StratumId::Cusp25,      StratumId::CuspWithSmoothBranch,
    StratumId::OrdinaryTriplePoint, StratumId::TwoCusps, StratumId::CuspAndNode, StratumId::TwoNodes,
};

std::string to_string(StratumId id);
// Throws InvalidInput for an unknown name.
StratumId stratum_from_string(const std::string& name);

struct StratumParams {
  int n = 3;
  FieldElement a, b, c;  // c is read only by TwoNodes
};

// Field of definition of the parameters.
FieldRef params_field(const StratumParams& p);

// Throws InvalidInput naming the violated constraint (n >= 3 included).
void check_admissible(StratumId id, const StratumParams& p);

// The family's linear system L, degree n+2, dimension n+1.
FormSpace stratum_space(StratumId id, const StratumParams& p);

// Closed-form basis of L^k, homogenized.
FormSpace stratum_power_basis(StratumId id, const StratumParams& p, int k);

// Whether the family's Khovanskii-finiteness equations hold at (q, k).
bool stratum_kf_condition(StratumId id, const StratumParams& p, const ProjPoint& q, int k);

// False for the three families whose condition does not involve k.
bool stratum_depends_on_k(StratumId id);

// Iteration bound for the family over a field of degree ell.
Integer stratum_bound(StratumId id, long n, long ell);

// Singularity types occurring on every member of the family.
std::vector<SingularityType> stratum_singularities(StratumId id);

// Preimages of each singular point, in the order the family places them.
std::vector<std::vector<ProjPoint>> designated_preimages(StratumId id, const StratumParams& p);

// Points of P^1 with coordinates in F that the family's equations single
// out (independent of k). Used to exercise the conditions.
std::vector<ProjPoint> candidate_points(StratumId id, const StratumParams& p);

// Decision through the family's closed forms. With q given the equations
// are checked for k up to the table bound; without q every KF point is
// listed. ell defaults to the degree of the parameter field.
Verdict stratum_decide(StratumId id, const StratumParams& p, const std::optional<ProjPoint>& q,
                       std::optional<long> ell = std::nullopt, std::optional<long> cap = kDefaultCap);

// Resultant eliminating the point coordinate from the root-extracted
// equations, normalized. Variables (a, b, u, v) for OrdinaryTriplePoint and
// (a, b, c, u, v) for TwoNodes; throws InvalidInput for other families.
MultiPoly locus_polynomial(StratumId id, int n);

}  // namespace kfin
