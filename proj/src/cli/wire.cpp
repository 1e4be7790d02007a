#include "kfin/cli/wire.hpp"

#include <limits>

#include "kfin/errors.hpp"

namespace kfin::cli {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw WireError(std::string("missing key '") + key + "'");
  return j.at(key);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InvalidInput& e) {
      throw WireError(e.what());
    }
  }
  throw WireError("expected a rational as a \"p/q\" string, got " + j.dump());
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw WireError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw WireError(std::string("malformed JSON: ") + e.what());
  }
}

FieldElement element_from_json(const Json& j, FieldRef field) {
  if (j.is_array()) {
    std::vector<Rational> residue;
    for (const auto& x : j) residue.push_back(rational_from_json(x));
    if (static_cast<int>(residue.size()) > field->degree()) {
      throw WireError("residue array longer than the field degree");
    }
    return FieldElement(field, std::move(residue));
  }
  return FieldElement(field, rational_from_json(j));
}

Json element_to_json(const FieldElement& e) {
  if (e.is_rational()) return to_string(e.is_zero() ? Rational(0) : e.residue().front());
  Json out = Json::array();
  for (const auto& r : e.residue()) out.push_back(to_string(r));
  return out;
}

FieldRef field_from_json(const Json& j) {
  if (j.is_null()) return NumberField::rationals();
  const Json& mp = require(j, "minpoly");
  if (!mp.is_array()) throw WireError("minpoly must be an integer array");
  std::vector<Integer> coeffs;
  for (const auto& c : mp) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(c.dump());
    } else if (c.is_string()) {
      Rational r = rational_from_json(c);
      if (r.get_den() != 1) throw WireError("minpoly coefficients must be integers");
      coeffs.push_back(r.get_num());
    } else {
      throw WireError("minpoly coefficients must be integers");
    }
  }
  return NumberField::from_minpoly(coeffs);
}

Json field_to_json(FieldRef f) {
  Json mp = Json::array();
  for (const auto& c : f->minpoly()) {
    if (c.fits_slong_p()) {
      mp.push_back(c.get_si());
    } else {
      mp.push_back(c.get_str());
    }
  }
  return Json{{"minpoly", mp}};
}

FormSpace curve_from_json(const Json& j) {
  FieldRef f = field_from_json(j.is_object() && j.contains("field") ? j.at("field") : Json());
  const int d = int_from_json(require(j, "degree"), "degree");
  if (d < 1) throw WireError("degree must be positive");
  const Json& basis = require(j, "basis");
  if (!basis.is_array() || basis.empty()) throw WireError("basis must be a nonempty array");
  std::vector<BinaryForm> forms;
  for (const auto& row : basis) {
    if (!row.is_array() || static_cast<int>(row.size()) != d + 1) {
      throw WireError("each basis row needs degree + 1 = " + std::to_string(d + 1) + " coefficients");
    }
    std::vector<FieldElement> coeffs;
    for (const auto& c : row) coeffs.push_back(element_from_json(c, f));
    forms.emplace_back(f, std::move(coeffs));
  }
  return FormSpace::from_basis(d, forms);
}

Json curve_to_json(const FormSpace& l) {
  Json out;
  if (!l.field()->is_rational()) out["field"] = field_to_json(l.field());
  out["degree"] = l.degree();
  Json rows = Json::array();
  for (const auto& form : l.basis()) {
    Json row = Json::array();
    for (const auto& c : form.coeffs()) row.push_back(element_to_json(c));
    rows.push_back(row);
  }
  out["basis"] = rows;
  return out;
}

bool is_stratum_spec(const Json& j) { return j.is_object() && j.contains("stratum"); }

StratumSpec stratum_from_json(const Json& j) {
  const Json& name = require(j, "stratum");
  if (!name.is_string()) throw WireError("stratum must be a string");
  StratumSpec s{};
  try {
    s.id = stratum_from_string(name.get<std::string>());
  } catch (const InvalidInput& e) {
    throw WireError(e.what());
  }
  s.params.n = int_from_json(require(j, "n"), "n");
  FieldRef f = field_from_json(j.contains("field") ? j.at("field") : Json());
  const Json params = j.contains("params") ? j.at("params") : Json::object();
  if (!params.is_object()) throw WireError("params must be an object");
  for (const auto& [key, value] : params.items()) {
    if (key != "a" && key != "b" && key != "c") throw WireError("unknown parameter '" + key + "'");
  }
  auto read = [&](const char* key) { return params.contains(key) ? element_from_json(params.at(key), f) : FieldElement(f); };
  s.params.a = read("a");
  s.params.b = read("b");
  s.params.c = read("c");
  check_admissible(s.id, s.params);
  return s;
}

Json stratum_to_json(const StratumSpec& s) {
  Json out;
  out["stratum"] = to_string(s.id);
  out["n"] = s.params.n;
  FieldRef f = params_field(s.params);
  if (!f->is_rational()) out["field"] = field_to_json(f);
  out["params"] = Json{{"a", element_to_json(s.params.a)}, {"b", element_to_json(s.params.b)}};
  if (s.id == StratumId::TwoNodes) out["params"]["c"] = element_to_json(s.params.c);
  return out;
}

ProjPoint point_from_text(const std::string& text, FieldRef field) {
  if (!text.empty() && text.front() == '[') {
    Json j = parse_json_text(text);
    if (!j.is_array() || j.size() != 2) throw WireError("point must be a two-element array");
    return ProjPoint(element_from_json(j[0], field), element_from_json(j[1], field));
  }
  auto sep = text.find_first_of(",:");
  if (sep == std::string::npos) throw WireError("point must read \"alpha,beta\": '" + text + "'");
  try {
    return ProjPoint(FieldElement(field, parse_rational(text.substr(0, sep))),
                     FieldElement(field, parse_rational(text.substr(sep + 1))));
  } catch (const InvalidInput& e) {
    throw WireError(e.what());
  }
}

std::string point_to_text(const ProjPoint& p) { return p.to_string(); }

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json verdict_to_json(const Verdict& v) {
  Json out;
  out["outcome"] = to_string(v.outcome);
  if (v.outcome == Outcome::KF) out["witness_k"] = v.k;
  if (v.outcome == Outcome::Undecided) out["cap"] = v.k;
  if (v.point) out["point"] = point_to_text(*v.point);
  out["bound_used"] = integer_to_json(v.bound_used);
  if (!v.witnesses.empty()) {
    Json ws = Json::array();
    for (const auto& w : v.witnesses) {
      Json wj;
      if (w.point) wj["point"] = point_to_text(*w.point);
      if (w.factor) wj["factor"] = w.factor->to_string("p");
      wj["k"] = w.k;
      ws.push_back(wj);
    }
    out["witnesses"] = ws;
  }
  Json trace = Json::array();
  for (const auto& t : v.trace) trace.push_back(Json{{"k", t.k}, {"member", t.member}});
  out["trace"] = trace;
  return out;
}

Json semigroup_to_json(const SemigroupReport& r) {
  Json out;
  out["degree"] = r.degree;
  out["k_max"] = r.k_max;
  out["orders"] = r.orders;
  Json gens = Json::array();
  for (const auto& [dk, m] : r.generators) gens.push_back(Json::array({dk, m}));
  out["generators"] = gens;
  out["kf_witness"] = r.kf_witness ? Json(*r.kf_witness) : Json();
  out["truncated"] = r.truncated;
  out["group_rank"] = r.group_rank;
  return out;
}

Json classification_to_json(const Classification& c) {
  Json out;
  out["type"] = to_string(c.type);
  out["delta"] = delta_invariant(c.type);
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(point_to_text(p));
  out["branch_order"] = pts;
  Json lam = Json::array();
  for (const auto& [alpha, value] : c.profile.values) lam.push_back(Json{{"alpha", alpha}, {"value", value}});
  out["lambda_prime"] = lam;
  return out;
}

Json singularities_to_json(const SingularityReport& r, const SingularLocus& locus) {
  Json out;
  out["genus"] = r.genus;
  out["total_delta"] = r.total_delta;
  Json loc;
  loc["ramification"] = locus.ramification.to_string("s");
  loc["ramified_at_infinity"] = locus.ramified_at_infinity;
  loc["secant"] = locus.secant.to_string("s");
  loc["secant_at_infinity"] = locus.secant_at_infinity;
  out["locus"] = loc;
  Json pts = Json::array();
  for (const auto& sp : r.points) {
    Json pj;
    Json pre = Json::array();
    for (const auto& p : sp.preimages) pre.push_back(point_to_text(p));
    pj["preimages"] = pre;
    if (sp.classification) {
      pj.update(classification_to_json(*sp.classification));
    } else {
      pj["type"] = nullptr;
    }
    pts.push_back(pj);
  }
  out["singular_points"] = pts;
  Json un = Json::array();
  for (const auto& u : r.unresolved) un.push_back(u.to_string("s"));
  out["unresolved"] = un;
  return out;
}

Json locus_to_json(StratumId id, int n, const MultiPoly& p) {
  Json out;
  out["stratum"] = to_string(id);
  out["n"] = n;
  out["variables"] = p.vars();
  out["term_count"] = p.term_count();
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json::array({m, to_string(c)}));
  out["terms"] = terms;
  out["polynomial"] = p.to_string();
  return out;
}

}  // namespace kfin::cli
