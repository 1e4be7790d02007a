#include "kfin/linalg.hpp"

#include <algorithm>

#include "kfin/errors.hpp"

namespace kfin {

EchelonBasis::EchelonBasis(FieldRef field, int ncols) : field_(field), ncols_(ncols) {}

void EchelonBasis::reduce_in_place(Row& v) const {
  if (static_cast<int>(v.size()) != ncols_) throw InvalidInput("row length does not match the basis");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (v[static_cast<std::size_t>(p)].is_zero()) continue;
    const FieldElement factor = v[static_cast<std::size_t>(p)];
    const Row& row = rows_[r];
    for (int j = p; j < ncols_; ++j) {
      if (!row[static_cast<std::size_t>(j)].is_zero()) v[static_cast<std::size_t>(j)].sub_mul(factor, row[static_cast<std::size_t>(j)]);
    }
  }
}

Row EchelonBasis::reduce(Row v) const {
  reduce_in_place(v);
  return v;
}

bool EchelonBasis::contains(const Row& v) const {
  Row r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const FieldElement& x) { return x.is_zero(); });
}

bool EchelonBasis::insert(Row v) {
  reduce_in_place(v);
  int p = 0;
  while (p < ncols_ && v[static_cast<std::size_t>(p)].is_zero()) ++p;
  if (p == ncols_) return false;
  for (const auto& x : v) {
    if (!x.is_rational()) field_ = join_fields(field_, x.field());
  }
  const FieldElement inv = v[static_cast<std::size_t>(p)].inverse();
  for (int j = p; j < ncols_; ++j) {
    if (!v[static_cast<std::size_t>(j)].is_zero()) v[static_cast<std::size_t>(j)] *= inv;
  }
  for (auto& row : rows_) {
    if (row[static_cast<std::size_t>(p)].is_zero()) continue;
    const FieldElement factor = row[static_cast<std::size_t>(p)];
    for (int j = p; j < ncols_; ++j) {
      if (!v[static_cast<std::size_t>(j)].is_zero()) row[static_cast<std::size_t>(j)].sub_mul(factor, v[static_cast<std::size_t>(j)]);
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

EchelonBasis echelon(FieldRef field, int ncols, const Matrix& m) {
  EchelonBasis e(field, ncols);
  for (const auto& row : m) e.insert(row);
  return e;
}

int rank_of(FieldRef field, int ncols, const Matrix& m) { return echelon(field, ncols, m).rank(); }

Matrix nullspace(FieldRef field, int ncols, const Matrix& m) {
  EchelonBasis e = echelon(field, ncols, m);
  FieldRef f = e.field();
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int p : e.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
  EchelonBasis out(f, ncols);
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Row x(static_cast<std::size_t>(ncols), FieldElement(f));
    x[static_cast<std::size_t>(free)] = FieldElement(f, 1);
    for (std::size_t r = 0; r < e.rows().size(); ++r) {
      x[static_cast<std::size_t>(e.pivots()[r])] = -e.rows()[r][static_cast<std::size_t>(free)];
    }
    out.insert(std::move(x));
  }
  return out.rows();
}

FieldRef field_of(const Matrix& m, FieldRef base) {
  FieldRef f = base;
  for (const auto& row : m) {
    for (const auto& x : row) {
      if (!x.is_rational()) f = join_fields(f, x.field());
    }
  }
  return f;
}

}  // namespace kfin
