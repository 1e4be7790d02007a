#pragma once

#include <string>
#include <vector>

#include "kfin/rational.hpp"

namespace kfin {

class NumberField;

// Fields are interned for the lifetime of the process, so a plain pointer is a
// stable identity: two FieldRefs are equal iff they denote the same minimal
// polynomial.
using FieldRef = const NumberField*;

// Q(theta) presented by a monic integral minimal polynomial of theta.
// Degree one (minpoly t) is the rational field.
class NumberField {
 public:
  static FieldRef rationals();

  // Coefficients constant term first. The polynomial must be monic and
  // nonconstant. Irreducibility is the caller's responsibility; a cheap
  // sanity check rejects polynomials with a rational root or a monic integral
  // quadratic factor whenever the search stays small.
  static FieldRef from_minpoly(const std::vector<Integer>& coeffs);

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  bool is_rational() const { return degree() == 1; }
  const std::vector<Integer>& minpoly() const { return minpoly_; }
  // Name used for the generator when printing elements.
  static constexpr const char* generator_name = "th";

  std::string describe() const;

  NumberField(const NumberField&) = delete;
  NumberField& operator=(const NumberField&) = delete;

 private:
  explicit NumberField(std::vector<Integer> coeffs);
  friend struct FieldRegistry;

  std::vector<Integer> minpoly_;
};

// An element of a number field, stored as its residue polynomial in theta of
// degree < [F:Q] (constant term first, trailing zeros stripped). A rational
// element combines with elements of any field by embedding.
class FieldElement {
 public:
  FieldElement();  // zero of Q
  explicit FieldElement(FieldRef field);
  FieldElement(FieldRef field, Rational value);
  FieldElement(FieldRef field, long value) : FieldElement(field, Rational(value)) {}
  // Reduces an arbitrary polynomial in theta modulo the minimal polynomial.
  FieldElement(FieldRef field, std::vector<Rational> residue);

  static FieldElement generator(FieldRef field);

  FieldRef field() const { return field_; }
  const std::vector<Rational>& residue() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_rational() const { return c_.size() <= 1; }
  Rational as_rational() const;  // throws InvalidInput when not rational

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  // this -= a * b without temporaries in the rational case.
  void sub_mul(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(long e) const;

  // Same field (after rational embedding) and same residue.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  void strip();
  void reduce();
  static FieldRef common_field(const FieldElement& a, const FieldElement& b);

  FieldRef field_;
  std::vector<Rational> c_;
};

FieldElement operator+(FieldElement a, const FieldElement& b);
FieldElement operator-(FieldElement a, const FieldElement& b);
FieldElement operator*(FieldElement a, const FieldElement& b);
FieldElement operator/(FieldElement a, const FieldElement& b);

// Field containing both operands after embedding Q into every field.
FieldRef join_fields(FieldRef a, FieldRef b);

}  // namespace kfin
