#pragma once

#include <vector>

#include "kfin/number_field.hpp"

namespace kfin {

using Row = std::vector<FieldElement>;
using Matrix = std::vector<Row>;

// Reduced row-echelon basis grown one vector at a time. Rows are kept sorted
// by pivot column, each pivot entry is 1 and every other row is zero there.
class EchelonBasis {
 public:
  EchelonBasis(FieldRef field, int ncols);

  // Adds v to the span; returns false when v was already in it.
  bool insert(Row v);
  // Remainder of v after clearing every pivot column.
  Row reduce(Row v) const;
  bool contains(const Row& v) const;

  FieldRef field() const { return field_; }
  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const Matrix& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  void reduce_in_place(Row& v) const;

  FieldRef field_;
  int ncols_;
  Matrix rows_;
  std::vector<int> pivots_;
};

EchelonBasis echelon(FieldRef field, int ncols, const Matrix& m);
int rank_of(FieldRef field, int ncols, const Matrix& m);
// RREF basis of {x : m x = 0}.
Matrix nullspace(FieldRef field, int ncols, const Matrix& m);
// Field containing every entry of m (and base).
FieldRef field_of(const Matrix& m, FieldRef base);

}  // namespace kfin
