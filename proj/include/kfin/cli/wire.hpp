#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "kfin/decision.hpp"
#include "kfin/form_space.hpp"
#include "kfin/singularities.hpp"
#include "kfin/strata.hpp"

namespace kfin::cli {

using Json = nlohmann::ordered_json;

// Structurally malformed input: bad JSON, missing keys, unknown names.
class WireError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json parse_json_text(const std::string& text);

// Rationals travel as "p/q" strings (bare JSON integers are accepted);
// irrational field elements as arrays of residue coefficients, constant first.
FieldElement element_from_json(const Json& j, FieldRef field);
Json element_to_json(const FieldElement& e);

FieldRef field_from_json(const Json& j);  // {"minpoly": [c0, ..., 1]}; absent means Q
Json field_to_json(FieldRef f);

// {"field"?, "degree", "basis": [[coeff_0, ..., coeff_d], ...]}, coefficient j
// multiplying x^(d-j) y^j. Throws InvalidInput for rank-deficient bases.
FormSpace curve_from_json(const Json& j);
// Canonical form: the reduced echelon basis.
Json curve_to_json(const FormSpace& l);

struct StratumSpec {
  StratumId id;
  StratumParams params;
};
// {"stratum", "n", "params": {"a", "b", "c"}}; admissibility is checked.
StratumSpec stratum_from_json(const Json& j);
Json stratum_to_json(const StratumSpec& s);

bool is_stratum_spec(const Json& j);

// "alpha,beta" or "alpha:beta" with rational entries, or a JSON array of
// two field elements.
ProjPoint point_from_text(const std::string& text, FieldRef field);
std::string point_to_text(const ProjPoint& p);

// Integers that fit in 64 bits as JSON numbers, larger ones as strings.
Json integer_to_json(const Integer& z);

Json verdict_to_json(const Verdict& v);
Json semigroup_to_json(const SemigroupReport& r);
Json singularities_to_json(const SingularityReport& r, const SingularLocus& locus);
Json classification_to_json(const Classification& c);
Json locus_to_json(StratumId id, int n, const MultiPoly& p);

}  // namespace kfin::cli
