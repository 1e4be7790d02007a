#pragma once

#include <vector>

#include "kfin/binary_form.hpp"
#include "kfin/form_space.hpp"
#include "kfin/linalg.hpp"

namespace kfin {

// Two-dimensional subspace U of V = W*, dual to L = U^perp, in reduced
// row-echelon form. Pairing is e_j* (x^(d-j) y^j) = 1.
class CenterLine {
 public:
  // Throws InvalidInput unless rows span a 2-dimensional space of width d+1.
  CenterLine(int degree, const Matrix& rows);

  int degree() const { return degree_; }
  const Matrix& matrix() const { return u_; }
  FieldRef field() const { return field_; }

  friend bool operator==(const CenterLine& a, const CenterLine& b) {
    return a.degree_ == b.degree_ && a.u_ == b.u_;
  }

 private:
  int degree_;
  FieldRef field_;
  Matrix u_;
};

// Throws InvalidInput unless dim L = d - 1.
CenterLine center_of(const FormSpace& l);
FormSpace space_of(const CenterLine& u);

// i rows spanning V^i(P): derivatives 0..i-1 of the Veronese map at P.
// Throws InvalidInput unless 0 <= i <= d.
Matrix osculating_basis(const ProjPoint& p, int i, int d);

// dim(U intersect span(V^alpha_1(P_1), ..., V^alpha_r(P_r))).
// Throws InvalidInput on duplicate points or an entry of alpha outside [0, d].
int lambda_prime(const CenterLine& u, const std::vector<ProjPoint>& points, const std::vector<int>& alpha);

}  // namespace kfin
