#include "kfin/singularities.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "kfin/bareiss.hpp"
#include "kfin/errors.hpp"

namespace kfin {

int delta_invariant(SingularityType t) {
  switch (t) {
    case SingularityType::Cusp:
    case SingularityType::Node:
      return 1;
    default:
      return 2;
  }
}

namespace {

constexpr std::array<std::pair<SingularityType, const char*>, 7> kTypeNames{{
    {SingularityType::Cusp, "Cusp"},
    {SingularityType::Node, "Node"},
    {SingularityType::Cusp345, "Cusp345"},
    {SingularityType::Cusp25, "Cusp25"},
    {SingularityType::Tacnode, "Tacnode"},
    {SingularityType::CuspWithSmoothBranch, "CuspWithSmoothBranch"},
    {SingularityType::OrdinaryTriplePoint, "OrdinaryTriplePoint"},
}};

struct Condition {
  std::vector<int> alpha;
  int value;
};

struct TableRow {
  SingularityType type;
  int r;
  std::vector<Condition> conditions;
};

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows{
      {SingularityType::Cusp, 1, {{{2}, 1}, {{4}, 1}}},
      {SingularityType::Node, 2, {{{1, 1}, 1}, {{2, 2}, 1}}},
      {SingularityType::Cusp345, 1, {{{3}, 2}, {{5}, 2}}},
      {SingularityType::Cusp25, 1, {{{2}, 1}, {{3}, 1}, {{4}, 2}}},
      {SingularityType::Tacnode, 2, {{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 2}}},
      {SingularityType::CuspWithSmoothBranch, 2, {{{2, 1}, 2}, {{4, 2}, 2}}},
      {SingularityType::OrdinaryTriplePoint, 3, {{{1, 1, 1}, 2}, {{2, 2, 2}, 2}}},
  };
  return rows;
}

}  // namespace

std::string to_string(SingularityType t) {
  for (const auto& [type, name] : kTypeNames) {
    if (type == t) return name;
  }
  return "?";
}

SingularityType singularity_type_from_string(const std::string& name) {
  for (const auto& [type, n] : kTypeNames) {
    if (name == n) return type;
  }
  throw InvalidInput("unknown singularity type '" + name + "'");
}

Classification classify_profile(const CenterLine& u, const std::vector<ProjPoint>& points) {
  const int r = static_cast<int>(points.size());
  if (r < 1 || r > 3) throw InvalidInput("classify_profile: expected 1 to 3 preimages");
  const int d = u.degree();
  std::vector<int> order(points.size());
  for (int i = 0; i < r; ++i) order[static_cast<std::size_t>(i)] = i;
  std::vector<Classification> matches;
  do {
    std::vector<ProjPoint> pts;
    for (int i : order) pts.push_back(points[static_cast<std::size_t>(i)]);
    for (const auto& row : table_rows()) {
      if (row.r != r) continue;
      LambdaProfile profile{pts, {}};
      bool ok = true;
      for (const auto& cond : row.conditions) {
        if (std::any_of(cond.alpha.begin(), cond.alpha.end(), [d](int a) { return a > d; })) {
          ok = false;
          break;
        }
        int value = lambda_prime(u, pts, cond.alpha);
        profile.values[cond.alpha] = value;
        if (value != cond.value) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      bool seen = std::any_of(matches.begin(), matches.end(),
                              [&](const Classification& c) { return c.type == row.type; });
      if (!seen) matches.push_back({row.type, pts, std::move(profile)});
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (matches.empty()) throw Unclassified("no singularity type matches the lambda' profile at the given preimages");
  if (matches.size() > 1) {
    throw InternalError("lambda' profile matches both " + to_string(matches[0].type) + " and " +
                        to_string(matches[1].type));
  }
  return matches.front();
}

namespace {

// Polynomial in t whose coefficients are polynomials in s.
using BiPoly = std::vector<UniPoly>;

void bi_strip(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// f_i(s) f_j(t) - f_j(s) f_i(t)
BiPoly minor(const UniPoly& fi, const UniPoly& fj) {
  const int d = std::max(fi.degree(), fj.degree());
  BiPoly out;
  for (int e = 0; e <= d; ++e) out.push_back(fi * fj.coeff(e) - fj * fi.coeff(e));
  bi_strip(out);
  return out;
}

// Divides p by (s - t) when exact.
bool divide_by_diagonal(BiPoly& p) {
  if (p.empty()) return false;
  FieldRef f = p.front().field();
  const UniPoly s = UniPoly::monomial(FieldElement(f, 1), 1);
  const int n = static_cast<int>(p.size()) - 1;
  if (n == 0) return false;
  // p = (t - s) q + rem, synthetic division in t.
  BiPoly q(static_cast<std::size_t>(n), UniPoly(f));
  q[static_cast<std::size_t>(n) - 1] = p[static_cast<std::size_t>(n)];
  for (int e = n - 1; e >= 1; --e) q[static_cast<std::size_t>(e) - 1] = p[static_cast<std::size_t>(e)] + s * q[static_cast<std::size_t>(e)];
  UniPoly rem = p[0] + s * q[0];
  if (!rem.is_zero()) return false;
  for (auto& c : q) c = -c;
  p = std::move(q);
  bi_strip(p);
  return true;
}

UniPoly resultant_in_t(const BiPoly& a, const BiPoly& b, FieldRef f) {
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  if (m < 0 || n < 0) return UniPoly(f);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<UniPoly>> syl(size, std::vector<UniPoly>(size, UniPoly(f)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) syl[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = a[static_cast<std::size_t>(m - j)];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) syl[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = b[static_cast<std::size_t>(n - j)];
  }
  return bareiss_determinant(
      std::move(syl), UniPoly::constant(FieldElement(f, 1)), UniPoly(f),
      [](const UniPoly& x) { return x.is_zero(); }, [](const UniPoly& x, const UniPoly& y) { return exact_div(x, y); });
}

BiPoly combine(const std::vector<BiPoly>& minors, std::mt19937& rng, FieldRef f) {
  std::uniform_int_distribution<int> coef(-7, 7);
  BiPoly out;
  for (const auto& m : minors) {
    FieldElement c(f, coef(rng));
    if (c.is_zero()) continue;
    if (out.size() < m.size()) out.resize(m.size(), UniPoly(f));
    for (std::size_t e = 0; e < m.size(); ++e) out[e] += m[e] * c;
  }
  bi_strip(out);
  return out;
}

UniPoly gcd_all(const std::vector<UniPoly>& polys, FieldRef f) {
  UniPoly g(f);
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.monic() : poly_gcd(g, p);
  }
  return g;
}

// Image of p under the map, scaled so the first nonzero coordinate is 1.
std::vector<FieldElement> normalized_image(const std::vector<BinaryForm>& forms, const ProjPoint& p) {
  std::vector<FieldElement> v;
  for (const auto& f : forms) v.push_back(f.eval(p.alpha(), p.beta()));
  auto it = std::find_if(v.begin(), v.end(), [](const FieldElement& x) { return !x.is_zero(); });
  if (it == v.end()) throw PreconditionError("base point at " + p.to_string());
  FieldElement inv = it->inverse();
  for (auto& x : v) x *= inv;
  return v;
}

}  // namespace

SingularLocus singular_parameter_locus(const FormSpace& l) {
  if (!basepoint_free(l)) throw PreconditionError("singular_parameter_locus: the linear system has base points");
  if (l.dim() < 2) throw PreconditionError("singular_parameter_locus: the map to P^0 is not generically injective");
  const FieldRef f = l.field();
  const auto forms = l.basis();
  std::vector<UniPoly> affine;
  for (const auto& form : forms) affine.push_back(form.dehomogenize());
  const std::size_t m = forms.size();

  SingularLocus out;

  std::vector<UniPoly> wronskians;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      wronskians.push_back(affine[i] * affine[j].derivative() - affine[j] * affine[i].derivative());
    }
  }
  out.ramification = gcd_all(wronskians, f);
  if (out.ramification.is_zero()) throw PreconditionError("singular_parameter_locus: the map is constant");
  {
    // Near (1:0) use w = y/x: value vector c_0, derivative vector c_1.
    Matrix local;
    Row value, deriv;
    for (const auto& form : forms) {
      value.push_back(form.coeff(0));
      deriv.push_back(form.degree() >= 1 ? form.coeff(1) : FieldElement(f));
    }
    local.push_back(value);
    local.push_back(deriv);
    out.ramified_at_infinity = rank_of(f, static_cast<int>(m), local) < 2;
  }

  std::vector<BiPoly> minors;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      BiPoly mij = minor(affine[i], affine[j]);
      if (mij.empty()) continue;
      while (divide_by_diagonal(mij)) {
      }
      minors.push_back(std::move(mij));
    }
  }
  std::mt19937 rng(20240611u);
  std::vector<UniPoly> resultants;
  for (int attempt = 0; attempt < 12 && resultants.size() < 3; ++attempt) {
    BiPoly a = combine(minors, rng, f);
    BiPoly b = combine(minors, rng, f);
    UniPoly r = resultant_in_t(a, b, f);
    if (!r.is_zero()) resultants.push_back(std::move(r));
  }
  if (resultants.empty()) throw PreconditionError("singular_parameter_locus: the map is not generically injective");
  UniPoly finite_secant = gcd_all(resultants, f);

  std::vector<UniPoly> at_infinity;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      at_infinity.push_back(affine[j] * forms[i].coeff(0) - affine[i] * forms[j].coeff(0));
    }
  }
  UniPoly partners = gcd_all(at_infinity, f);
  if (partners.is_zero()) throw PreconditionError("singular_parameter_locus: the map is not generically injective");
  out.secant_at_infinity = !partners.is_constant();
  out.secant = squarefree_part(finite_secant * partners);

  // Candidate F-rational parameters, then group them by image point.
  std::vector<ProjPoint> candidates;
  auto add_candidate = [&](const ProjPoint& p) {
    if (std::find(candidates.begin(), candidates.end(), p) == candidates.end()) candidates.push_back(p);
  };
  if (out.ramified_at_infinity || out.secant_at_infinity) add_candidate(ProjPoint::infinity());
  for (const UniPoly* poly : {&out.ramification, &out.secant}) {
    if (poly->is_constant()) continue;
    for (const auto& r : roots_in_field(*poly)) add_candidate(ProjPoint::finite(r));
    UniPoly rest = unresolved_part(*poly);
    if (!rest.is_constant() && std::find(out.unresolved.begin(), out.unresolved.end(), rest) == out.unresolved.end()) {
      out.unresolved.push_back(rest);
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const ProjPoint& a, const ProjPoint& b) {
    if (a.is_infinity() != b.is_infinity()) return a.is_infinity();
    if (a.alpha().is_rational() && b.alpha().is_rational()) return a.alpha().as_rational() < b.alpha().as_rational();
    return a.to_string() < b.to_string();
  });
  auto ramified = [&](const ProjPoint& p) {
    if (p.is_infinity()) return out.ramified_at_infinity;
    return !out.ramification.is_constant() && out.ramification.eval(p.alpha()).is_zero();
  };
  std::vector<std::pair<std::vector<FieldElement>, std::vector<ProjPoint>>> groups;
  for (const auto& p : candidates) {
    auto image = normalized_image(forms, p);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == image; });
    if (it == groups.end()) {
      groups.push_back({std::move(image), {p}});
    } else {
      it->second.push_back(p);
    }
  }
  for (auto& [image, pts] : groups) {
    if (pts.size() >= 2 || std::any_of(pts.begin(), pts.end(), ramified)) out.rational_groups.push_back(std::move(pts));
  }
  return out;
}

SingularityReport analyze_singularities(const FormSpace& l) {
  SingularityReport report;
  report.genus = genus_of(l);
  SingularLocus locus = singular_parameter_locus(l);
  report.unresolved = locus.unresolved;
  const bool codim_two = l.dim() == l.degree() - 1;
  std::optional<CenterLine> u;
  if (codim_two) u = center_of(l);
  for (auto& pts : locus.rational_groups) {
    SingularPointReport point{pts, std::nullopt};
    if (u && pts.size() <= 3) {
      point.classification = classify_profile(*u, pts);
      report.total_delta += delta_invariant(point.classification->type);
    }
    report.points.push_back(std::move(point));
  }
  return report;
}

}  // namespace kfin
