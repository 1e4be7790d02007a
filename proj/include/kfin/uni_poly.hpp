#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kfin/number_field.hpp"

namespace kfin {

// Dense univariate polynomial over a number field, constant term first,
// trailing zeros stripped (the zero polynomial has no coefficients).
class UniPoly {
 public:
  UniPoly() : field_(NumberField::rationals()) {}
  explicit UniPoly(FieldRef field) : field_(field) {}
  UniPoly(FieldRef field, std::vector<FieldElement> coeffs);
  static UniPoly from_rationals(const std::vector<Rational>& coeffs);
  static UniPoly constant(const FieldElement& c);
  // c * t^e
  static UniPoly monomial(const FieldElement& c, int e);
  // t - r
  static UniPoly linear_root(const FieldElement& r);

  FieldRef field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement coeff(int i) const;
  const FieldElement& leading() const { return c_.back(); }

  UniPoly monic() const;
  UniPoly derivative() const;
  FieldElement eval(const FieldElement& x) const;
  // Every coefficient lies in Q.
  bool has_rational_coeffs() const;
  std::vector<Rational> rational_coeffs() const;  // throws unless has_rational_coeffs

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const FieldElement& c);

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(std::string_view var = "t") const;

 private:
  void strip();

  FieldRef field_;
  std::vector<FieldElement> c_;
};

UniPoly operator+(UniPoly a, const UniPoly& b);
UniPoly operator-(UniPoly a, const UniPoly& b);
UniPoly operator*(UniPoly a, const UniPoly& b);
UniPoly operator*(UniPoly a, const FieldElement& c);

// a = q*b + r with deg r < deg b. Throws InvalidInput when b is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Quotient a/b; throws InternalError when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

// Monic gcd. Throws InvalidInput when both inputs are zero.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);

struct XgcdResult {
  UniPoly g, s, t;  // g = s*p + t*q, g monic
};
XgcdResult poly_xgcd(const UniPoly& p, const UniPoly& q);

// p / gcd(p, p'), monic. Zero stays zero.
UniPoly squarefree_part(const UniPoly& p);

// Roots of p in its field of definition that can be certified without
// factoring over F: every rational root, and the root of a linear cofactor
// left after dividing those out. An irrational root of a factor of degree >= 2
// is not extracted; unresolved_part reports that factor instead.
std::vector<FieldElement> roots_in_field(const UniPoly& p);

// Monic squarefree part of p with the linear factors of roots_in_field(p)
// removed; constant when every root was found.
UniPoly unresolved_part(const UniPoly& p);

}  // namespace kfin
