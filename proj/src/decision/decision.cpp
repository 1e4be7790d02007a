#include "kfin/decision.hpp"

#include <algorithm>

#include "kfin/errors.hpp"

namespace kfin {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::KF:
      return "KF";
    case Outcome::NotKF:
      return "NotKF";
    case Outcome::Undecided:
      return "Undecided";
  }
  return "?";
}

std::string WitnessPoint::describe() const {
  if (point) return point->to_string();
  if (factor) return "root of " + factor->to_string("p") + " over F, Q = (p:1)";
  return "?";
}

bool membership(PowerTower& tower, const ProjPoint& q, int k) {
  if (k < 1) throw InvalidInput("membership: k must be positive");
  const FormSpace& lk = tower.power(k);
  return lk.contains(linear_power(q, lk.degree()));
}

bool membership(const FormSpace& l, const ProjPoint& q, int k) {
  PowerTower tower(l);
  return membership(tower, q, k);
}

Integer general_bound(long d, long n, long ell) {
  Integer first = 2 * (d - n - 1);
  Integer inner = Integer(96) * d * d * d * ell;
  Integer second = inner * inner + 2;
  second *= second;
  return std::max(first, second);
}

namespace {

// Number of k to try: min(bound, cap), with "no cap" meaning the bound.
long iteration_limit(const Integer& bound, std::optional<long> cap) {
  if (cap && Integer(*cap) < bound) return *cap;
  if (!bound.fits_slong_p()) throw InvalidInput("uncapped search bound " + bound.get_str() + " is not enumerable");
  return bound.get_si();
}

bool bound_reached(const Integer& bound, std::optional<long> cap) { return !cap || bound <= Integer(*cap); }

Verdict exhausted(const Integer& bound, std::optional<long> cap, bool decidable, std::vector<TraceEntry> trace) {
  Verdict v;
  v.bound_used = bound;
  v.trace = std::move(trace);
  if (decidable && bound_reached(bound, cap)) {
    v.outcome = Outcome::NotKF;
    v.k = bound.get_si();
  } else {
    v.outcome = Outcome::Undecided;
    v.k = cap ? std::min<long>(*cap, bound.fits_slong_p() ? bound.get_si() : *cap) : bound.get_si();
  }
  return v;
}

}  // namespace

Verdict decide_point(const FormSpace& l, const ProjPoint& q, long ell, std::optional<long> cap) {
  if (ell < 1) throw InvalidInput("field degree must be positive");
  const int g = genus_of(l);
  if (g != 2) {
    throw PreconditionError("decide_point requires arithmetic genus 2, got " + std::to_string(g) +
                            "; use membership or value_semigroup for bounded checks");
  }
  const Integer bound = general_bound(l.degree(), l.dim() - 1, ell);
  const long limit = iteration_limit(bound, cap);
  PowerTower tower(l);
  std::vector<TraceEntry> trace;
  for (long k = 1; k <= limit; ++k) {
    bool member = membership(tower, q, static_cast<int>(k));
    trace.push_back({k, member});
    if (member) {
      Verdict v;
      v.outcome = Outcome::KF;
      v.k = k;
      v.bound_used = bound;
      v.point = q;
      v.trace = std::move(trace);
      return v;
    }
  }
  return exhausted(bound, cap, true, std::move(trace));
}

std::vector<UniPoly> symbolic_residuals(const FormSpace& lk) {
  const int n = lk.degree();
  const FieldRef f = lk.field();
  // (x - t y)^n has coefficient C(n,j) (-t)^j at column j.
  auto column_poly = [&](int j) {
    Rational c(binomial(n, j));
    if (j % 2 == 1) c = -c;
    return UniPoly::monomial(FieldElement(f, c), j);
  };
  std::vector<bool> pivot(static_cast<std::size_t>(n) + 1, false);
  for (int p : lk.pivots()) pivot[static_cast<std::size_t>(p)] = true;
  std::vector<UniPoly> out;
  for (int j = 0; j <= n; ++j) {
    if (pivot[static_cast<std::size_t>(j)]) continue;
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(n) + 1, FieldElement(f));
    coeffs[static_cast<std::size_t>(j)] = column_poly(j).leading();
    for (std::size_t r = 0; r < lk.pivots().size(); ++r) {
      const int p = lk.pivots()[r];
      const FieldElement& entry = lk.matrix()[r][static_cast<std::size_t>(j)];
      if (entry.is_zero()) continue;
      coeffs[static_cast<std::size_t>(p)].sub_mul(column_poly(p).leading(), entry);
    }
    out.emplace_back(f, std::move(coeffs));
  }
  return out;
}

namespace {

struct LevelResult {
  bool found = false;
  std::vector<WitnessPoint> witnesses;
};

LevelResult search_level(const FormSpace& lk, long k) {
  LevelResult res;
  const FieldRef f = lk.field();
  UniPoly g(f);
  bool all_zero = true;
  for (const auto& r : symbolic_residuals(lk)) {
    if (r.is_zero()) continue;
    all_zero = false;
    g = g.is_zero() ? r.monic() : poly_gcd(g, r);
    if (g.is_constant()) break;
  }
  if (all_zero) {
    // L^k is everything: every point qualifies; report the two coordinate points.
    res.found = true;
    res.witnesses.push_back({ProjPoint::rational(0, 1), std::nullopt, k});
    res.witnesses.push_back({ProjPoint::infinity(), std::nullopt, k});
    return res;
  }
  if (!g.is_constant()) {
    res.found = true;
    for (const auto& r : roots_in_field(g)) res.witnesses.push_back({ProjPoint::finite(r), std::nullopt, k});
    UniPoly rest = unresolved_part(g);
    if (!rest.is_constant()) res.witnesses.push_back({std::nullopt, rest, k});
  }
  if (lk.contains(linear_power(ProjPoint::infinity(), lk.degree()))) {
    res.found = true;
    res.witnesses.push_back({ProjPoint::infinity(), std::nullopt, k});
  }
  return res;
}

}  // namespace

Verdict any_valuation(const FormSpace& l, long ell, const AnyValuationOptions& options) {
  if (ell < 1) throw InvalidInput("field degree must be positive");
  const bool decidable = genus_of(l) == 2;
  const Integer bound = options.bound ? *options.bound : general_bound(l.degree(), l.dim() - 1, ell);
  const long limit = iteration_limit(bound, options.cap);
  std::optional<PowerTower> tower;
  if (!options.powers) tower.emplace(l);
  std::vector<TraceEntry> trace;
  for (long k = 1; k <= limit; ++k) {
    FormSpace lk = options.powers ? options.powers(static_cast<int>(k)) : tower->power(static_cast<int>(k));
    LevelResult level = search_level(lk, k);
    trace.push_back({k, level.found});
    if (level.found) {
      Verdict v;
      v.outcome = Outcome::KF;
      v.k = k;
      v.bound_used = bound;
      v.witnesses = std::move(level.witnesses);
      for (const auto& w : v.witnesses) {
        if (w.point) {
          v.point = w.point;
          break;
        }
      }
      v.trace = std::move(trace);
      return v;
    }
  }
  return exhausted(bound, options.cap, decidable, std::move(trace));
}

bool replay(const FormSpace& l, const Verdict& v) {
  if (v.outcome != Outcome::KF) return true;
  PowerTower tower(l);
  if (v.point && !membership(tower, *v.point, static_cast<int>(v.k))) return false;
  for (const auto& w : v.witnesses) {
    if (w.point) {
      if (!membership(tower, *w.point, static_cast<int>(w.k))) return false;
    } else if (w.factor) {
      // Every residual must vanish modulo the factor.
      for (const auto& r : symbolic_residuals(tower.power(static_cast<int>(w.k)))) {
        if (!divmod(r, *w.factor).second.is_zero()) return false;
      }
    }
  }
  return true;
}

bool unibranch_kf(const FormSpace& l, const ProjPoint& q) {
  const int g = genus_of(l);
  const int d = l.degree();
  if (2 * g > d) {
    throw PreconditionError("unibranch_kf requires genus g <= d/2; got g = " + std::to_string(g) + ", d = " +
                            std::to_string(d) + " and the statement fails beyond that bound");
  }
  const auto orders = orders_at(l, q);
  const int n = l.dim() - 1;
  const int gaps = d + 1 - static_cast<int>(orders.size());
  if (gaps != d - n) throw InvalidInput("inconsistent input: order set has the wrong size");
  const bool has0 = std::find(orders.begin(), orders.end(), 0) != orders.end();
  const bool has1 = std::find(orders.begin(), orders.end(), 1) != orders.end();
  if (!has0 || has1) {
    throw InvalidInput("inconsistent input: " + q.to_string() + " is not a ramified preimage of a singular point");
  }
  return std::find(orders.begin(), orders.end(), d) != orders.end();
}

}  // namespace kfin
