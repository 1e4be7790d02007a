#pragma once

// Shared generators and independent oracles for the test suites.

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "kfin/binary_form.hpp"
#include "kfin/form_space.hpp"
#include "kfin/linalg.hpp"
#include "kfin/multi_poly.hpp"
#include "kfin/number_field.hpp"
#include "kfin/strata.hpp"

namespace kfin {

// Readable gtest diagnostics.
inline void PrintTo(const FieldElement& e, std::ostream* os) { *os << e.to_string(); }
inline void PrintTo(const BinaryForm& f, std::ostream* os) { *os << f.to_string(); }
inline void PrintTo(const ProjPoint& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const FormSpace& s, std::ostream* os) {
  *os << "<";
  for (const auto& b : s.basis()) *os << " " << b.to_string() << ";";
  *os << " >";
}

}  // namespace kfin

namespace kfin::testing {

inline FieldRef QQ() { return NumberField::rationals(); }

inline FieldElement q(long v) { return FieldElement(QQ(), v); }
inline FieldElement q(long num, long den) { return FieldElement(QQ(), Rational(num, den)); }
inline FieldElement q(const Rational& r) { return FieldElement(QQ(), r); }

inline BinaryForm form(const std::vector<long>& coeffs) {
  std::vector<FieldElement> c;
  for (long x : coeffs) c.push_back(q(x));
  return BinaryForm(QQ(), c);
}

inline BinaryForm form(FieldRef f, const std::vector<FieldElement>& coeffs) { return BinaryForm(f, coeffs); }

// <x^5 - 5x^4y - y^5, x^3y^2, x^2y^3, xy^4>
inline FormSpace quintic() {
  return FormSpace::from_basis(
      5, {form({1, -5, 0, 0, 0, -1}), form({0, 0, 1, 0, 0, 0}), form({0, 0, 0, 1, 0, 0}), form({0, 0, 0, 0, 1, 0})});
}

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  Rational rational(long num = 9, long den = 4) {
    Rational r(integer(-num, num), integer(1, den));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(long num = 9, long den = 4) {
    for (;;) {
      Rational r = rational(num, den);
      if (r != 0) return r;
    }
  }

  FieldElement element(FieldRef f, long num = 5) {
    std::vector<Rational> c;
    for (int i = 0; i < f->degree(); ++i) c.push_back(rational(num, 3));
    return FieldElement(f, c);
  }

  FieldElement nonzero_element(FieldRef f) {
    for (;;) {
      FieldElement e = element(f);
      if (!e.is_zero()) return e;
    }
  }

  BinaryForm binary_form(FieldRef f, int degree) {
    std::vector<FieldElement> c;
    for (int j = 0; j <= degree; ++j) c.push_back(element(f));
    return BinaryForm(f, c);
  }

  ProjPoint point() {
    if (integer(0, 7) == 0) return ProjPoint::infinity();
    return ProjPoint::finite(q(rational(6, 3)));
  }

  // Admissible rational parameters avoiding the degenerate special values
  // that collapse a family onto a smaller stratum.
  StratumParams params(StratumId id, int n) {
    for (;;) {
      StratumParams p;
      p.n = n;
      p.a = q(nonzero_rational(6, 3));
      p.b = q(nonzero_rational(6, 3));
      p.c = q(nonzero_rational(6, 3));
      try {
        check_admissible(id, p);
      } catch (const std::exception&) {
        continue;
      }
      return p;
    }
  }
};

// Rows of a matrix as forms in a common field.
inline Matrix rows_of(const std::vector<BinaryForm>& forms) {
  Matrix m;
  for (const auto& f : forms) m.push_back(f.coeffs());
  return m;
}

inline int span_rank(FieldRef f, int degree, const std::vector<BinaryForm>& forms) {
  return forms.empty() ? 0 : rank_of(f, degree + 1, rows_of(forms));
}

// Span of every product of k basis elements, by direct enumeration of
// multisets of basis indices.
inline std::vector<BinaryForm> naive_power_spanning_set(const FormSpace& l, int k) {
  const auto basis = l.basis();
  std::vector<BinaryForm> out;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  const int m = static_cast<int>(basis.size());
  for (;;) {
    BinaryForm prod = basis[static_cast<std::size_t>(idx[0])];
    for (int i = 1; i < k; ++i) prod = prod * basis[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    out.push_back(prod);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - 1) --pos;
    if (pos < 0) break;
    int v = ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

inline FormSpace naive_power(const FormSpace& l, int k) {
  return FormSpace(l.degree() * k, naive_power_spanning_set(l, k));
}

// (beta x - alpha y)^(dk) in L^k decided by comparing ranks of spanning sets.
inline bool naive_membership(const FormSpace& l, const ProjPoint& pt, int k) {
  auto span = naive_power_spanning_set(l, k);
  const int n = l.degree() * k;
  FieldRef f = join_fields(l.field(), pt.field());
  const int before = span_rank(f, n, span);
  span.push_back(linear_power(pt, n));
  return span_rank(f, n, span) == before;
}

// Orders realised at pt: m is an order iff L meets the multiples of
// l_pt^m in a larger space than the multiples of l_pt^(m+1).
inline std::vector<int> naive_orders(const FormSpace& l, const ProjPoint& pt) {
  const int d = l.degree();
  FieldRef f = join_fields(l.field(), pt.field());
  auto meet_dim = [&](int m) {
    std::vector<BinaryForm> multiples;
    const BinaryForm power = linear_power(pt, m);
    for (int j = 0; j <= d - m; ++j) multiples.push_back(power * BinaryForm::monomial(d - m, j, FieldElement(f, 1)));
    auto all = l.basis();
    const int dim_l = static_cast<int>(all.size());
    const int dim_v = static_cast<int>(multiples.size());
    all.insert(all.end(), multiples.begin(), multiples.end());
    return dim_l + dim_v - span_rank(f, d, all);
  };
  std::vector<int> out;
  for (int m = 0; m <= d; ++m) {
    int here = meet_dim(m);
    int next = m == d ? 0 : meet_dim(m + 1);
    if (here > next) out.push_back(m);
  }
  return out;
}

// H_{u,v} for n = 3 in the variables (a, b, u, v), written out by hand.
inline MultiPoly triple_point_locus_closed_form() {
  const std::vector<std::string> vars{"a", "b", "u", "v"};
  auto var = [&](const char* n) { return MultiPoly::variable(vars, n); };
  const MultiPoly one = MultiPoly::constant(vars, 1);
  MultiPoly a = var("a"), b = var("b"), u = var("u"), v = var("v");
  MultiPoly lin = (u - v) * a + u * b + u - one;
  MultiPoly inner = u * b + (u + v * Rational(3, 2)) * a + (u + one * Rational(3, 2));
  MultiPoly i_uv = inner * inner - (one + v * a * Rational(6) + v * v * a * a) * Rational(5, 4);
  return lin.pow(5) - u * v * a * (a + b + one) * i_uv * Rational(625);
}

}  // namespace kfin::testing
