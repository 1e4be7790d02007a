#include "kfin/center.hpp"

#include "kfin/errors.hpp"

namespace kfin {

CenterLine::CenterLine(int degree, const Matrix& rows) : degree_(degree) {
  field_ = field_of(rows, NumberField::rationals());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != degree + 1) throw InvalidInput("center row has the wrong length");
  }
  EchelonBasis e = echelon(field_, degree + 1, rows);
  if (e.rank() != 2) throw InvalidInput("projection center must be 2-dimensional, got rank " + std::to_string(e.rank()));
  u_ = e.rows();
}

CenterLine center_of(const FormSpace& l) {
  const int d = l.degree();
  if (l.dim() != d - 1) {
    throw InvalidInput("center_of needs codimension 2: dim L = " + std::to_string(l.dim()) + ", d = " + std::to_string(d));
  }
  return CenterLine(d, nullspace(l.field(), d + 1, l.matrix()));
}

FormSpace space_of(const CenterLine& u) {
  const int d = u.degree();
  EchelonBasis e(u.field(), d + 1);
  for (auto& row : nullspace(u.field(), d + 1, u.matrix())) e.insert(std::move(row));
  return FormSpace::from_echelon(d, std::move(e));
}

Matrix osculating_basis(const ProjPoint& p, int i, int d) {
  if (i < 0 || i > d) throw InvalidInput("osculating index out of range");
  FieldRef f = p.field();
  Matrix out;
  for (int r = 0; r < i; ++r) {
    Row row(static_cast<std::size_t>(d) + 1, FieldElement(f));
    if (p.is_infinity()) {
      // Veronese map (1, t, ..., t^d) near t = 0.
      row[static_cast<std::size_t>(r)] = FieldElement(f, 1);
    } else {
      // d^r/ds^r of s^(d-j) at s = alpha, the falling factorial (d-j)_r alpha^(d-j-r).
      for (int j = 0; j <= d; ++j) {
        const int e = d - j;
        if (e < r) continue;
        Integer falling = 1;
        for (int q = 0; q < r; ++q) falling *= e - q;
        row[static_cast<std::size_t>(j)] = FieldElement(f, Rational(falling)) * p.alpha().pow(e - r);
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

int lambda_prime(const CenterLine& u, const std::vector<ProjPoint>& points, const std::vector<int>& alpha) {
  if (points.size() != alpha.size()) throw InvalidInput("lambda_prime: one multiplicity per point is required");
  const int d = u.degree();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw InvalidInput("lambda_prime: duplicate point " + points[i].to_string());
    }
  }
  Matrix filtration;
  FieldRef f = u.field();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (auto& row : osculating_basis(points[i], alpha[i], d)) filtration.push_back(std::move(row));
  }
  f = field_of(filtration, f);
  const int dim_f = rank_of(f, d + 1, filtration);
  Matrix stacked = u.matrix();
  stacked.insert(stacked.end(), filtration.begin(), filtration.end());
  return 2 + dim_f - rank_of(f, d + 1, stacked);
}

}  // namespace kfin
