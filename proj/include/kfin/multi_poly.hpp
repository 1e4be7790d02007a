#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kfin/rational.hpp"
#include "kfin/uni_poly.hpp"

namespace kfin {

// Exponent vector, one entry per variable of the ring.
using Monomial = std::vector<int>;

// Graded lexicographic: higher total degree first, ties broken
// lexicographically with the first variable most significant.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial over Q in a fixed, ordered list of variables. Terms are
// kept in descending grlex order with nonzero coefficients only.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  explicit MultiPoly(std::vector<std::string> vars);
  static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
  // Throws InvalidInput when name is not among vars.
  static MultiPoly variable(std::vector<std::string> vars, std::string_view name);

  const std::vector<std::string>& vars() const { return vars_; }
  int var_index(std::string_view name) const;  // -1 when absent
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;  // -1 for zero
  // Leading coefficient in grlex; throws on zero.
  const Rational& leading_coeff() const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly pow(int e) const;

  // Coefficients c_i with p = sum_i c_i * var^i; each c_i is free of var.
  std::vector<MultiPoly> coefficients_in(int var) const;
  // Replaces one variable by a polynomial in the same ring.
  MultiPoly substitute(int var, const MultiPoly& value) const;
  // Full evaluation; point has one entry per variable.
  Rational eval(const std::vector<Rational>& point) const;
  // Univariate polynomial in var after every other variable is specialized.
  UniPoly specialize_to_univariate(int var, const std::vector<Rational>& point) const;
  // Primitive integral multiple with positive grlex-leading coefficient.
  MultiPoly normalized() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Text form with explicit "+", "*", "^".
  std::string to_string() const;

 private:
  void check_ring(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(MultiPoly a, const Rational& c);

// a / b when b divides a; throws InternalError otherwise and InvalidInput
// when b is zero.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

// Sylvester resultant with respect to the named variable. Both inputs must
// live in the same ring; throws InvalidInput when var is absent from both.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var);

// Sylvester resultant of two univariate polynomials.
FieldElement resultant(const UniPoly& p, const UniPoly& q);

// True when c * a == b for some nonzero rational c.
bool equal_up_to_scalar(const MultiPoly& a, const MultiPoly& b);

}  // namespace kfin
