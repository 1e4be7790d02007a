#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kfin/center.hpp"
#include "kfin/form_space.hpp"
#include "kfin/uni_poly.hpp"

namespace kfin {

enum class SingularityType { Cusp, Node, Cusp345, Cusp25, Tacnode, CuspWithSmoothBranch, OrdinaryTriplePoint };

int delta_invariant(SingularityType t);
std::string to_string(SingularityType t);
// Throws InvalidInput for an unknown name.
SingularityType singularity_type_from_string(const std::string& name);

// Thrown when no row of the classification table matches.
class Unclassified : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LambdaProfile {
  std::vector<ProjPoint> points;
  std::map<std::vector<int>, int> values;
};

struct Classification {
  SingularityType type;
  // Preimages in the order the matching row reads them (cusp branch first
  // for a cusp with smooth branch).
  std::vector<ProjPoint> points;
  LambdaProfile profile;
};

// Matches the lambda' values at the preimages of one singular point against
// the table rows, trying every ordering of the points. 1 <= r <= 3.
Classification classify_profile(const CenterLine& u, const std::vector<ProjPoint>& points);

// Parameter values where the map P^1 -> P^n fails to be injective or
// immersive. Finite parameters appear as roots of univariate polynomials in
// s (dehomogenized at w = 1); the point (1:0) is flagged separately.
struct SingularLocus {
  UniPoly ramification;           // gcd of the Wronskian minors
  bool ramified_at_infinity = false;
  UniPoly secant;                 // s-coordinates of pairs s != t with f(s) ~ f(t)
  bool secant_at_infinity = false;
  // F-rational preimages grouped by image point; each group is one singular point.
  std::vector<std::vector<ProjPoint>> rational_groups;
  // Factors of ramification * secant with no root extracted in F (monic).
  std::vector<UniPoly> unresolved;
};

// Throws PreconditionError when l has base points or the map is not
// generically injective.
SingularLocus singular_parameter_locus(const FormSpace& l);

struct SingularPointReport {
  std::vector<ProjPoint> preimages;
  std::optional<Classification> classification;  // absent when codim L != 2
};

struct SingularityReport {
  int genus = 0;
  std::vector<SingularPointReport> points;
  std::vector<UniPoly> unresolved;
  int total_delta = 0;  // over classified points
};

// Locus, grouping, and per-point classification. Throws PreconditionError
// for a linear system with base points.
SingularityReport analyze_singularities(const FormSpace& l);

}  // namespace kfin
