#include "kfin/strata.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "kfin/errors.hpp"
#include "kfin/roots_of_unity.hpp"

namespace kfin {

namespace {

constexpr std::array<std::pair<StratumId, const char*>, 8> kNames{{
    {StratumId::Tacnode, "Tacnode"},
    {StratumId::Cusp345, "Cusp345"},
    {StratumId::Cusp25, "Cusp25"},
    {StratumId::CuspWithSmoothBranch, "CuspWithSmoothBranch"},
    {StratumId::OrdinaryTriplePoint, "OrdinaryTriplePoint"},
    {StratumId::TwoCusps, "TwoCusps"},
    {StratumId::CuspAndNode, "CuspAndNode"},
    {StratumId::TwoNodes, "TwoNodes"},
}};

// Dehomogenized form: x-exponent -> coefficient, with y restored on output.
using Affine = std::map<int, FieldElement>;

BinaryForm homogenize(int degree, const Affine& terms, FieldRef f) {
  BinaryForm out(f, degree);
  for (const auto& [e, c] : terms) {
    if (e < 0 || e > degree) throw InternalError("exponent outside the form degree");
    out += BinaryForm::monomial(degree, degree - e, c);
  }
  return out;
}

FormSpace space_from(int degree, const std::vector<Affine>& rows, FieldRef f) {
  std::vector<BinaryForm> forms;
  for (const auto& r : rows) forms.push_back(homogenize(degree, r, f));
  return FormSpace::from_basis(degree, forms);
}

FieldElement sign_pow(long k) { return FieldElement(NumberField::rationals(), k % 2 == 0 ? 1 : -1); }

}  // namespace

std::string to_string(StratumId id) {
  for (const auto& [s, name] : kNames) {
    if (s == id) return name;
  }
  return "?";
}

StratumId stratum_from_string(const std::string& name) {
  for (const auto& [s, n] : kNames) {
    if (name == n) return s;
  }
  throw InvalidInput("unknown stratum '" + name + "'");
}

FieldRef params_field(const StratumParams& p) {
  FieldRef f = NumberField::rationals();
  for (const FieldElement* x : {&p.a, &p.b, &p.c}) {
    if (!x->is_rational()) f = join_fields(f, x->field());
  }
  return f;
}

void check_admissible(StratumId id, const StratumParams& p) {
  if (p.n < 3) throw InvalidInput("n must be at least 3");
  FieldRef f = params_field(p);
  const FieldElement one(f, 1);
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw InvalidInput(to_string(id) + ": parameters violate " + what);
  };
  switch (id) {
    case StratumId::Tacnode:
      require(!p.a.is_zero(), "a != 0");
      break;
    case StratumId::OrdinaryTriplePoint:
      require(!p.a.is_zero(), "a != 0");
      require(!(p.a + p.b + one).is_zero(), "a + b != -1");
      break;
    case StratumId::CuspAndNode:
      require(!(p.b + one).is_zero(), "b != -1");
      break;
    case StratumId::TwoNodes:
      require(!p.a.is_zero(), "a != 0");
      require(!p.b.is_zero(), "b != 0");
      require(!p.c.is_zero() && !(p.c - one).is_zero(), "c not in {0, 1}");
      break;
    default:
      break;
  }
}

namespace {

// Basis rows of L^k from the closed forms; k = 1 gives L itself for every
// family except TwoNodes, whose k = 1 rows coincide with the two-case
// parameterization.
std::vector<Affine> power_rows(StratumId id, const StratumParams& p, int k) {
  const FieldRef f = params_field(p);
  const int d = p.n + 2;
  const int N = d * k;
  const FieldElement one(f, 1);
  const FieldElement kk(f, k);
  const FieldElement& a = p.a;
  const FieldElement& b = p.b;
  const FieldElement& c = p.c;
  const FieldElement sg = sign_pow(k);
  std::vector<Affine> rows;
  auto mono = [&](int e) { return Affine{{e, one}}; };
  switch (id) {
    case StratumId::Tacnode:
      rows.push_back({{N, one}, {1, -(sg * kk * b)}, {0, sg}});
      rows.push_back({{N - 1, one}, {1, sg * a}});
      for (int e = N - 2; e >= 2; --e) rows.push_back(mono(e));
      break;
    case StratumId::Cusp345:
      rows.push_back({{N, one}, {N - 2, kk * a}});
      for (int e = N - 3; e >= 0; --e) rows.push_back(mono(e));
      break;
    case StratumId::Cusp25:
      rows.push_back({{N, one}, {N - 3, -(kk * a)}});
      rows.push_back({{N - 2, one}, {N - 3, -b}});
      for (int e = N - 4; e >= 0; --e) rows.push_back(mono(e));
      break;
    case StratumId::CuspWithSmoothBranch:
      rows.push_back({{N, one}, {N - 1, -(kk * a)}, {0, sg}});
      for (int e = N - 2; e >= 1; --e) rows.push_back(mono(e));
      break;
    case StratumId::OrdinaryTriplePoint:
      rows.push_back({{N, one}, {1, (one + b + a).pow(k) - (one + a.pow(k))}, {0, a.pow(k)}});
      for (int e = N - 1; e >= 2; --e) rows.push_back({{e, one}, {1, -one}});
      break;
    case StratumId::TwoCusps:
      rows.push_back({{N, one}, {N - 1, -(kk * a)}});
      for (int e = N - 2; e >= 2; --e) rows.push_back(mono(e));
      rows.push_back({{1, -(kk * b)}, {0, one}});
      break;
    case StratumId::CuspAndNode:
      rows.push_back({{N, one}, {N - 1, -(kk * a)}, {1, kk * a - one}});
      for (int e = N - 2; e >= 2; --e) rows.push_back({{e, one}, {1, -one}});
      rows.push_back({{1, (b + one).pow(k) - one}, {0, one}});
      break;
    case StratumId::TwoNodes: {
      const FieldElement bk = b.pow(k), ak = a.pow(k);
      const FieldElement num = bk - ak - sg * (c.pow(N) - ak * bk);
      const FieldElement den1 = bk - sg * c;
      const FieldElement head = (-a).pow(k);
      if (!den1.is_zero()) {
        rows.push_back({{N, head}, {N - 1, -(num / den1)}, {0, one}});
        for (int i = 2; i <= N - 1; ++i) rows.push_back({{N - 1, -((bk - sg * c.pow(i)) / den1)}, {N - i, one}});
      } else {
        const FieldElement den2 = bk - sg * c * c;
        if (den2.is_zero()) throw InternalError("TwoNodes: both closed-form denominators vanish");
        rows.push_back({{N, head}, {N - 2, -(num / den2)}, {0, one}});
        for (int i = 1; i <= N - 1; ++i) {
          if (i == 2) continue;
          rows.push_back({{N - 2, -((bk - sg * c.pow(i)) / den2)}, {N - i, one}});
        }
      }
      break;
    }
  }
  // Drop zero coefficients so exponents that coincide do not leave stray keys.
  for (auto& r : rows) {
    for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  }
  return rows;
}

}  // namespace

FormSpace stratum_space(StratumId id, const StratumParams& p) {
  check_admissible(id, p);
  const FieldRef f = params_field(p);
  const int d = p.n + 2;
  const FieldElement one(f, 1);
  const FieldElement& a = p.a;
  const FieldElement& b = p.b;
  const FieldElement& c = p.c;
  std::vector<Affine> rows;
  auto mono = [&](int e) { return Affine{{e, one}}; };
  switch (id) {
    case StratumId::Tacnode:
      rows.push_back({{d, one}, {1, b}, {0, -one}});
      rows.push_back({{d - 1, one}, {1, -a}});
      for (int e = d - 2; e >= 2; --e) rows.push_back(mono(e));
      break;
    case StratumId::Cusp345:
      rows.push_back({{d, one}, {d - 2, a}});
      for (int e = d - 3; e >= 0; --e) rows.push_back(mono(e));
      break;
    case StratumId::Cusp25:
      rows.push_back({{d, one}, {d - 3, -a}});
      rows.push_back({{d - 2, one}, {d - 3, -b}});
      for (int e = d - 4; e >= 0; --e) rows.push_back(mono(e));
      break;
    case StratumId::CuspWithSmoothBranch:
      rows.push_back({{d, one}, {d - 1, -a}, {0, -one}});
      for (int e = d - 2; e >= 1; --e) rows.push_back(mono(e));
      break;
    case StratumId::OrdinaryTriplePoint:
      rows.push_back({{d, one}, {1, b}, {0, a}});
      for (int e = d - 1; e >= 2; --e) rows.push_back({{e, one}, {1, -one}});
      break;
    case StratumId::TwoCusps:
      rows.push_back({{d, one}, {d - 1, -a}});
      for (int e = d - 2; e >= 2; --e) rows.push_back(mono(e));
      rows.push_back({{1, -b}, {0, one}});
      break;
    case StratumId::CuspAndNode:
      rows.push_back({{d, one}, {d - 1, -a}, {1, a - one}});
      for (int e = d - 2; e >= 2; --e) rows.push_back({{e, one}, {1, -one}});
      rows.push_back({{1, b}, {0, one}});
      break;
    case StratumId::TwoNodes:
      if (!(b + c).is_zero()) {
        const FieldElement den = b + c;
        rows.push_back({{d, -a}, {d - 1, -((c.pow(d) - a * b - a + b) / den)}, {0, one}});
        for (int i = 2; i <= d - 1; ++i) rows.push_back({{d - 1, -((b + c.pow(i)) / den)}, {d - i, one}});
      } else {
        const FieldElement den = c * c - c;
        rows.push_back({{d, -a}, {d - 2, -((c.pow(d) + a * c - a - c) / den)}, {0, one}});
        rows.push_back(mono(d - 1));
        for (int i = 3; i <= d - 1; ++i) rows.push_back({{d - 2, -((c.pow(i) - c) / den)}, {d - i, one}});
      }
      break;
  }
  for (auto& r : rows) {
    for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  }
  return space_from(d, rows, f);
}

FormSpace stratum_power_basis(StratumId id, const StratumParams& p, int k) {
  check_admissible(id, p);
  if (k < 1) throw InvalidInput("stratum_power_basis: k must be positive");
  return space_from((p.n + 2) * k, power_rows(id, p, k), params_field(p));
}

bool stratum_depends_on_k(StratumId id) {
  return !(id == StratumId::Cusp345 || id == StratumId::Cusp25 || id == StratumId::TwoCusps);
}

bool stratum_kf_condition(StratumId id, const StratumParams& p, const ProjPoint& q, int k) {
  check_admissible(id, p);
  if (k < 1) throw InvalidInput("stratum_kf_condition: k must be positive");
  const FieldRef f = join_fields(params_field(p), q.field());
  const int d = p.n + 2;
  const long N = static_cast<long>(d) * k;
  const FieldElement one(f, 1), zero(f), dd(f, d);
  const FieldElement& a = p.a;
  const FieldElement& b = p.b;
  const FieldElement& c = p.c;
  const FieldElement sg = sign_pow(k);
  const bool inf = q.is_infinity();
  const FieldElement x = inf ? zero : q.alpha();
  auto at = [&](const FieldElement& alpha) { return !inf && x == alpha; };
  switch (id) {
    case StratumId::Tacnode: {
      if (inf) return false;
      const FieldElement& alpha = x;
      return (-alpha).pow(N) == sg && (dd * alpha * alpha * a + alpha * b - dd).is_zero();
    }
    case StratumId::Cusp345:
    case StratumId::Cusp25:
      return inf || (at(zero) && a.is_zero());
    case StratumId::CuspWithSmoothBranch: {
      if (inf) return false;
      return (-x).pow(N) == sg && dd * x == a;
    }
    case StratumId::OrdinaryTriplePoint: {
      if (inf) return false;
      const FieldElement alpha = -x;  // Q = (alpha : -1)
      return (alpha + one).pow(N) == (one + b + a).pow(k) && alpha.pow(N) == a.pow(k);
    }
    case StratumId::TwoCusps:
      return (at(zero) && a.is_zero()) || (inf && b.is_zero()) || (at(a / dd) && a * b == dd * dd);
    case StratumId::CuspAndNode:
      if (inf) return (b + one).pow(k).is_one();
      return at(a / dd) && (a - dd).pow(N) == a.pow(N) * (b + one).pow(k);
    case StratumId::TwoNodes: {
      if (inf || x.is_zero()) return false;
      const FieldElement beta = -x.inverse();  // Q = (-1 : beta)
      return (-a).pow(k) == beta.pow(N) && b.pow(k) * (beta + one).pow(N) == sg * (beta + c).pow(N);
    }
  }
  return false;
}

Integer stratum_bound(StratumId id, long n, long ell) {
  if (ell < 1) throw InvalidInput("field degree must be positive");
  switch (id) {
    case StratumId::Cusp345:
    case StratumId::Cusp25:
    case StratumId::TwoCusps:
      return 1;
    case StratumId::Tacnode:
      return Integer(2 * ell) * (2 * ell) + 2;
    case StratumId::CuspWithSmoothBranch:
    case StratumId::CuspAndNode:
      return Integer(ell) * ell + 2;
    case StratumId::OrdinaryTriplePoint:
    case StratumId::TwoNodes: {
      const Integer d = n + 2;
      Integer inner = 16 * d * d * d * d * ell * ell + 2;
      return inner * inner;
    }
  }
  return 0;
}

std::vector<SingularityType> stratum_singularities(StratumId id) {
  using S = SingularityType;
  switch (id) {
    case StratumId::Tacnode:
      return {S::Tacnode};
    case StratumId::Cusp345:
      return {S::Cusp345};
    case StratumId::Cusp25:
      return {S::Cusp25};
    case StratumId::CuspWithSmoothBranch:
      return {S::CuspWithSmoothBranch};
    case StratumId::OrdinaryTriplePoint:
      return {S::OrdinaryTriplePoint};
    case StratumId::TwoCusps:
      return {S::Cusp, S::Cusp};
    case StratumId::CuspAndNode:
      return {S::Cusp, S::Node};
    case StratumId::TwoNodes:
      return {S::Node, S::Node};
  }
  return {};
}

std::vector<std::vector<ProjPoint>> designated_preimages(StratumId id, const StratumParams& p) {
  check_admissible(id, p);
  const ProjPoint inf = ProjPoint::infinity();
  const ProjPoint zero = ProjPoint::rational(0, 1);
  const ProjPoint one = ProjPoint::rational(1, 1);
  switch (id) {
    case StratumId::Tacnode:
      return {{inf, zero}};
    case StratumId::Cusp345:
    case StratumId::Cusp25:
      return {{inf}};
    case StratumId::CuspWithSmoothBranch:
      return {{inf, zero}};
    case StratumId::OrdinaryTriplePoint:
      return {{inf, zero, one}};
    case StratumId::TwoCusps:
      return {{inf}, {zero}};
    case StratumId::CuspAndNode:
      return {{inf}, {zero, one}};
    case StratumId::TwoNodes:
      // (x:y) = (1:c) is the point (1/c : 1).
      return {{inf, zero}, {one, ProjPoint::finite(p.c.inverse())}};
  }
  return {};
}

namespace {

// Roots in F of gcd over k in {1, 2} of the two-equation systems, as points.
std::vector<ProjPoint> system_roots(const UniPoly& lhs1, const FieldElement& rhs1, const UniPoly& lhs2,
                                    const FieldElement& rhs2, int k_max,
                                    const std::function<std::optional<ProjPoint>(const FieldElement&)>& to_point) {
  std::vector<ProjPoint> out;
  for (int k = 1; k <= k_max; ++k) {
    UniPoly p1 = lhs1, p2 = lhs2;
    for (int i = 1; i < k; ++i) {
      p1 *= lhs1;
      p2 *= lhs2;
    }
    p1 -= UniPoly::constant(rhs1.pow(k));
    p2 -= UniPoly::constant(rhs2.pow(k));
    if (p1.is_zero() || p2.is_zero()) continue;
    UniPoly g = poly_gcd(p1, p2);
    if (g.is_constant()) continue;
    for (const auto& r : roots_in_field(g)) {
      auto pt = to_point(r);
      if (pt && std::find(out.begin(), out.end(), *pt) == out.end()) out.push_back(*pt);
    }
  }
  return out;
}

}  // namespace

std::vector<ProjPoint> candidate_points(StratumId id, const StratumParams& p) {
  check_admissible(id, p);
  const FieldRef f = params_field(p);
  const int d = p.n + 2;
  const FieldElement one(f, 1), dd(f, d);
  const ProjPoint inf = ProjPoint::infinity();
  const ProjPoint zero = ProjPoint::rational(0, 1);
  const UniPoly t = UniPoly::monomial(one, 1);
  switch (id) {
    case StratumId::Tacnode: {
      UniPoly q(f, {-dd, p.b, dd * p.a});
      std::vector<ProjPoint> out;
      for (const auto& r : roots_in_field(q)) out.push_back(ProjPoint::finite(r));
      return out;
    }
    case StratumId::Cusp345:
    case StratumId::Cusp25:
      return {inf, zero};
    case StratumId::CuspWithSmoothBranch:
      return {ProjPoint::finite(p.a / dd)};
    case StratumId::TwoCusps:
      return {zero, inf, ProjPoint::finite(p.a / dd)};
    case StratumId::CuspAndNode:
      return {inf, ProjPoint::finite(p.a / dd)};
    case StratumId::OrdinaryTriplePoint: {
      UniPoly ad = t, a1d = t + UniPoly::constant(one);
      for (int i = 1; i < d; ++i) {
        ad *= t;
        a1d *= t + UniPoly::constant(one);
      }
      return system_roots(ad, p.a, a1d, one + p.b + p.a, 2,
                          [](const FieldElement& alpha) { return std::optional<ProjPoint>(ProjPoint::finite(-alpha)); });
    }
    case StratumId::TwoNodes: {
      // beta^d = -a and (beta+c)^d / (beta+1)^d = -b, cleared of denominators per k.
      std::vector<ProjPoint> out;
      for (int k = 1; k <= 2; ++k) {
        const long N = static_cast<long>(d) * k;
        UniPoly bn = UniPoly::monomial(one, static_cast<int>(N));
        UniPoly p1 = bn - UniPoly::constant((-p.a).pow(k));
        UniPoly b1 = UniPoly::constant(one), bc = UniPoly::constant(one);
        for (long i = 0; i < N; ++i) {
          b1 *= t + UniPoly::constant(one);
          bc *= t + UniPoly::constant(p.c);
        }
        UniPoly p2 = b1 * p.b.pow(k) - bc * sign_pow(k);
        if (p1.is_zero() || p2.is_zero()) continue;
        UniPoly g = poly_gcd(p1, p2);
        if (g.is_constant()) continue;
        for (const auto& beta : roots_in_field(g)) {
          if (beta.is_zero()) continue;
          ProjPoint pt = ProjPoint::finite(-beta.inverse());
          if (std::find(out.begin(), out.end(), pt) == out.end()) out.push_back(pt);
        }
      }
      return out;
    }
  }
  return {};
}

namespace {

Verdict kf_verdict(long k, const Integer& bound, std::optional<ProjPoint> point, std::vector<WitnessPoint> witnesses,
                   std::vector<TraceEntry> trace) {
  Verdict v;
  v.outcome = Outcome::KF;
  v.k = k;
  v.bound_used = bound;
  v.point = std::move(point);
  v.witnesses = std::move(witnesses);
  v.trace = std::move(trace);
  return v;
}

Verdict not_kf(const Integer& bound, std::optional<long> cap, std::vector<TraceEntry> trace) {
  Verdict v;
  v.bound_used = bound;
  v.trace = std::move(trace);
  if (!cap || bound <= Integer(*cap)) {
    v.outcome = Outcome::NotKF;
    v.k = bound.get_si();
  } else {
    v.outcome = Outcome::Undecided;
    v.k = *cap;
  }
  return v;
}

// Least k with zeta^k = 1, searched up to the root-of-unity bound of the
// field; nullopt when zeta is zero or not a root of unity.
std::optional<long> unit_order(const FieldElement& zeta) {
  if (zeta.is_zero()) return std::nullopt;
  return is_root_of_unity(zeta).order;
}

// Exact least k for the two families whose table bound is beyond iteration.
std::optional<long> closed_form_order(StratumId id, const StratumParams& p, const ProjPoint& q) {
  if (q.is_infinity()) return std::nullopt;
  const FieldRef f = join_fields(params_field(p), q.field());
  const int d = p.n + 2;
  const FieldElement one(f, 1);
  std::optional<long> o1, o2;
  if (id == StratumId::OrdinaryTriplePoint) {
    const FieldElement alpha = -q.alpha();
    o1 = unit_order((alpha + one).pow(d) / (one + p.b + p.a));
    o2 = unit_order(alpha.pow(d) / p.a);
  } else {
    if (q.alpha().is_zero()) return std::nullopt;
    const FieldElement beta = -q.alpha().inverse();
    o1 = unit_order(beta.pow(d) / (-p.a));
    if ((beta + one).is_zero()) return std::nullopt;
    o2 = unit_order((beta + p.c).pow(d) / ((-p.b) * (beta + one).pow(d)));
  }
  if (!o1 || !o2) return std::nullopt;
  return std::lcm(*o1, *o2);
}

}  // namespace

Verdict stratum_decide(StratumId id, const StratumParams& p, const std::optional<ProjPoint>& q,
                       std::optional<long> ell, std::optional<long> cap) {
  check_admissible(id, p);
  const FieldRef f = params_field(p);
  const long field_ell = ell ? *ell : f->degree();
  const Integer bound = stratum_bound(id, p.n, field_ell);
  const int d = p.n + 2;
  const FieldElement one(f, 1), dd(f, d);

  if (q) {
    const bool enumerable = !cap || bound <= Integer(*cap);
    if (enumerable) {
      std::vector<TraceEntry> trace;
      const long limit = bound.get_si();
      for (long k = 1; k <= limit; ++k) {
        bool ok = stratum_kf_condition(id, p, *q, static_cast<int>(k));
        trace.push_back({k, ok});
        if (ok) return kf_verdict(k, bound, q, {}, std::move(trace));
      }
      return not_kf(bound, cap, std::move(trace));
    }
    if (id == StratumId::OrdinaryTriplePoint || id == StratumId::TwoNodes) {
      auto k = closed_form_order(id, p, *q);
      if (!k) return not_kf(bound, std::nullopt, {});
      if (!stratum_kf_condition(id, p, *q, static_cast<int>(*k))) {
        throw InternalError("closed-form order does not satisfy the family's equations");
      }
      return kf_verdict(*k, bound, q, {}, {{*k, true}});
    }
    // Remaining families have small bounds; a cap below them stops the loop.
    std::vector<TraceEntry> trace;
    for (long k = 1; k <= *cap; ++k) {
      bool ok = stratum_kf_condition(id, p, *q, static_cast<int>(k));
      trace.push_back({k, ok});
      if (ok) return kf_verdict(k, bound, q, {}, std::move(trace));
    }
    return not_kf(bound, cap, std::move(trace));
  }

  const long limit = (!cap || bound <= Integer(*cap)) ? bound.get_si() : *cap;
  std::vector<WitnessPoint> found;
  auto finish = [&](std::vector<TraceEntry> trace) {
    if (found.empty()) return not_kf(bound, cap, std::move(trace));
    std::stable_sort(found.begin(), found.end(), [](const WitnessPoint& x, const WitnessPoint& y) { return x.k < y.k; });
    std::optional<ProjPoint> first;
    for (const auto& w : found) {
      if (w.point) {
        first = w.point;
        break;
      }
    }
    long k = found.front().k;
    return kf_verdict(k, bound, first, std::move(found), std::move(trace));
  };
  auto add_point = [&](const ProjPoint& pt, long k) {
    if (k <= limit) found.push_back({pt, std::nullopt, k});
  };

  switch (id) {
    case StratumId::Tacnode: {
      // alpha is a root of d a t^2 + b t - d; zeta = -(-alpha)^d.
      UniPoly rest(f, {-dd, p.b, dd * p.a});
      const UniPoly t = UniPoly::monomial(one, 1);
      UniPoly zeta = -t;
      for (int i = 1; i < d; ++i) zeta *= -t;
      zeta = -zeta;
      zeta = divmod(zeta, rest).second;
      UniPoly power = zeta;
      std::vector<TraceEntry> trace;
      for (long k = 1; k <= limit && !rest.is_constant(); ++k) {
        UniPoly diff = divmod(power - UniPoly::constant(one), rest).second;
        UniPoly g = diff.is_zero() ? rest.monic() : poly_gcd(diff, rest);
        bool hit = !g.is_constant();
        trace.push_back({k, hit});
        if (hit) {
          for (const auto& r : roots_in_field(g)) found.push_back({ProjPoint::finite(r), std::nullopt, k});
          UniPoly un = unresolved_part(g);
          if (!un.is_constant()) found.push_back({std::nullopt, un, k});
          rest = exact_div(rest, g);
          if (rest.is_constant()) break;
          zeta = divmod(zeta, rest).second;
          power = divmod(power, rest).second;
        }
        power = divmod(power * zeta, rest).second;
      }
      return finish(std::move(trace));
    }
    case StratumId::Cusp345:
    case StratumId::Cusp25:
      add_point(ProjPoint::infinity(), 1);
      if (p.a.is_zero()) add_point(ProjPoint::rational(0, 1), 1);
      return finish({{1, true}});
    case StratumId::TwoCusps:
      if (p.a.is_zero()) add_point(ProjPoint::rational(0, 1), 1);
      if (p.b.is_zero()) add_point(ProjPoint::infinity(), 1);
      if (p.a * p.b == dd * dd) add_point(ProjPoint::finite(p.a / dd), 1);
      return finish({{1, !found.empty()}});
    case StratumId::CuspWithSmoothBranch: {
      const FieldElement alpha = p.a / dd;
      if (auto o = unit_order(-(-alpha).pow(d))) add_point(ProjPoint::finite(alpha), *o);
      return finish({});
    }
    case StratumId::CuspAndNode: {
      if (auto o = unit_order(p.b + one)) add_point(ProjPoint::infinity(), *o);
      if (!p.a.is_zero()) {
        const FieldElement zeta = (p.a - dd).pow(d) / (p.a.pow(d) * (p.b + one));
        if (auto o = unit_order(zeta)) add_point(ProjPoint::finite(p.a / dd), *o);
      }
      return finish({});
    }
    case StratumId::OrdinaryTriplePoint:
    case StratumId::TwoNodes: {
      AnyValuationOptions opts;
      opts.cap = cap;
      opts.bound = bound;
      opts.powers = [id, p](int k) { return stratum_power_basis(id, p, k); };
      return any_valuation(stratum_space(id, p), field_ell, opts);
    }
  }
  throw InternalError("unhandled stratum");
}

namespace {

MultiPoly drop_last_variable(const MultiPoly& p, std::vector<std::string> vars) {
  MultiPoly out(std::move(vars));
  for (const auto& [m, c] : p.terms()) {
    if (m.back() != 0) throw InternalError("eliminated variable survived the resultant");
    out.add_term(Monomial(m.begin(), m.end() - 1), c);
  }
  return out;
}

}  // namespace

MultiPoly locus_polynomial(StratumId id, int n) {
  if (n < 3) throw InvalidInput("n must be at least 3");
  const int d = n + 2;
  if (id == StratumId::OrdinaryTriplePoint) {
    const std::vector<std::string> vars{"a", "b", "u", "v", "alpha"};
    auto var = [&](const char* name) { return MultiPoly::variable(vars, name); };
    const MultiPoly one = MultiPoly::constant(vars, 1);
    MultiPoly p1 = (var("alpha") + one).pow(d) - var("u") * (one + var("b") + var("a"));
    MultiPoly p2 = var("alpha").pow(d) - var("v") * var("a");
    return drop_last_variable(resultant(p1, p2, "alpha"), {"a", "b", "u", "v"}).normalized();
  }
  if (id == StratumId::TwoNodes) {
    const std::vector<std::string> vars{"a", "b", "c", "u", "v", "beta"};
    auto var = [&](const char* name) { return MultiPoly::variable(vars, name); };
    const MultiPoly one = MultiPoly::constant(vars, 1);
    MultiPoly p1 = var("a") * var("u") - var("beta").pow(d);
    MultiPoly p2 = var("b") * var("v") * (var("beta") + one).pow(d) - (var("beta") + var("c")).pow(d);
    return drop_last_variable(resultant(p1, p2, "beta"), {"a", "b", "c", "u", "v"}).normalized();
  }
  throw InvalidInput("locus_polynomial is defined for OrdinaryTriplePoint and TwoNodes only, not " + to_string(id));
}

}  // namespace kfin
