#pragma once

#include <vector>

#include "kfin/binary_form.hpp"
#include "kfin/linalg.hpp"

namespace kfin {

// Linear subspace of degree-d binary forms held as its canonical reduced
// row-echelon basis (pivots ordered from x^d towards y^d). Two spaces are
// equal iff their bases are equal.
class FormSpace {
 public:
  // Span of the generators. Throws InvalidInput on a zero generator, a
  // degree mismatch, or an empty list.
  FormSpace(int degree, const std::vector<BinaryForm>& generators);
  // Like the span constructor but also rejects linearly dependent input.
  static FormSpace from_basis(int degree, const std::vector<BinaryForm>& basis);
  // All of K[x,y]_d.
  static FormSpace full(int degree, FieldRef field);
  static FormSpace from_echelon(int degree, EchelonBasis basis);

  int degree() const { return degree_; }
  int dim() const { return basis_.rank(); }
  FieldRef field() const { return basis_.field(); }
  const Matrix& matrix() const { return basis_.rows(); }
  const std::vector<int>& pivots() const { return basis_.pivots(); }
  std::vector<BinaryForm> basis() const;
  const EchelonBasis& echelon_basis() const { return basis_; }

  bool contains(const BinaryForm& f) const;
  BinaryForm reduce(const BinaryForm& f) const;

  friend bool operator==(const FormSpace& a, const FormSpace& b) {
    return a.degree_ == b.degree_ && a.basis_.rows() == b.basis_.rows();
  }

 private:
  FormSpace(int degree, EchelonBasis basis) : degree_(degree), basis_(std::move(basis)) {}

  int degree_;
  EchelonBasis basis_;
};

FormSpace space_product(const FormSpace& a, const FormSpace& b);
// Throws InvalidInput when k <= 0.
FormSpace space_power(const FormSpace& l, int k);
// Throws InvalidInput on a degree mismatch. The zero form is always contained.
bool space_contains(const FormSpace& s, const BinaryForm& f);

// Caches L, L^2, ... for one query; L^(k+1) is built as L * L^k. Not shared
// between threads.
class PowerTower {
 public:
  explicit PowerTower(FormSpace l);
  const FormSpace& base() const { return powers_.front(); }
  const FormSpace& power(int k);
  int computed() const { return static_cast<int>(powers_.size()); }

 private:
  std::vector<FormSpace> powers_;
};

// Vanishing orders at q realised by nonzero elements of s; sorted, size dim s.
std::vector<int> orders_at(const FormSpace& s, const ProjPoint& q);

// No point of P^1 is a common zero of every form in l.
bool basepoint_free(const FormSpace& l);

// Arithmetic genus d*k + 1 - dim L^k at k = max(2, d-n+1) and k+1.
// Throws PreconditionError when l has base points and InternalError when the
// two evaluations disagree.
int genus_of(const FormSpace& l);

}  // namespace kfin
