#pragma once

#include <string>
#include <vector>

#include "kfin/number_field.hpp"
#include "kfin/uni_poly.hpp"

namespace kfin {

// Degree-d binary form; coefficient j belongs to x^(d-j) y^j.
class BinaryForm {
 public:
  BinaryForm(FieldRef field, int degree);  // zero form
  BinaryForm(FieldRef field, std::vector<FieldElement> coeffs);
  // c * x^(d-j) y^j
  static BinaryForm monomial(int degree, int j, const FieldElement& c);

  FieldRef field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const FieldElement& coeff(int j) const { return c_[static_cast<std::size_t>(j)]; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  bool is_zero() const;

  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  BinaryForm& operator*=(const FieldElement& c);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);

  FieldElement eval(const FieldElement& x, const FieldElement& y) const;
  // f(t, 1)
  UniPoly dehomogenize() const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  FieldRef field_;
  std::vector<FieldElement> c_;
};

BinaryForm operator+(BinaryForm a, const BinaryForm& b);
BinaryForm operator-(BinaryForm a, const BinaryForm& b);
BinaryForm operator*(BinaryForm a, const FieldElement& c);

// A point (alpha:beta) of P^1 in normal form: beta = 1, or (1:0).
class ProjPoint {
 public:
  // Throws InvalidInput when both coordinates vanish.
  ProjPoint(const FieldElement& alpha, const FieldElement& beta);
  static ProjPoint finite(const FieldElement& alpha);  // (alpha:1)
  static ProjPoint infinity();                          // (1:0)
  static ProjPoint rational(const Rational& alpha, const Rational& beta);

  const FieldElement& alpha() const { return alpha_; }
  const FieldElement& beta() const { return beta_; }
  bool is_infinity() const { return beta_.is_zero(); }
  FieldRef field() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

  std::string to_string() const;  // "(alpha:beta)"

 private:
  FieldElement alpha_, beta_;
};

// (beta x - alpha y)^m
BinaryForm linear_power(const ProjPoint& q, int m);

}  // namespace kfin
