#include "kfin/form_space.hpp"

#include <algorithm>

#include "kfin/errors.hpp"

namespace kfin {

namespace {

FieldRef generators_field(const std::vector<BinaryForm>& gens) {
  FieldRef f = NumberField::rationals();
  for (const auto& g : gens) f = join_fields(f, g.field());
  return f;
}

}  // namespace

FormSpace::FormSpace(int degree, const std::vector<BinaryForm>& generators)
    : degree_(degree), basis_(generators_field(generators), degree + 1) {
  if (degree < 0) throw InvalidInput("form space of negative degree");
  if (generators.empty()) throw InvalidInput("form space needs at least one generator");
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidInput("generator degree does not match the space");
    if (g.is_zero()) throw InvalidInput("the zero form cannot be a basis element");
    basis_.insert(g.coeffs());
  }
}

FormSpace FormSpace::from_basis(int degree, const std::vector<BinaryForm>& basis) {
  FormSpace s(degree, basis);
  if (s.dim() != static_cast<int>(basis.size())) {
    throw InvalidInput("basis is linearly dependent: " + std::to_string(basis.size()) + " forms span dimension " +
                       std::to_string(s.dim()));
  }
  return s;
}

FormSpace FormSpace::full(int degree, FieldRef field) {
  std::vector<BinaryForm> mons;
  for (int j = 0; j <= degree; ++j) mons.push_back(BinaryForm::monomial(degree, j, FieldElement(field, 1)));
  return FormSpace(degree, mons);
}

FormSpace FormSpace::from_echelon(int degree, EchelonBasis basis) {
  if (basis.ncols() != degree + 1) throw InvalidInput("echelon basis width does not match the degree");
  if (basis.rank() == 0) throw InvalidInput("form space needs at least one generator");
  return FormSpace(degree, std::move(basis));
}

std::vector<BinaryForm> FormSpace::basis() const {
  std::vector<BinaryForm> out;
  for (const auto& row : basis_.rows()) out.emplace_back(field(), row);
  return out;
}

bool FormSpace::contains(const BinaryForm& f) const {
  if (f.degree() != degree_) throw InvalidInput("membership test with a form of the wrong degree");
  return basis_.contains(f.coeffs());
}

BinaryForm FormSpace::reduce(const BinaryForm& f) const {
  if (f.degree() != degree_) throw InvalidInput("reduction of a form of the wrong degree");
  return BinaryForm(field(), basis_.reduce(f.coeffs()));
}

FormSpace space_product(const FormSpace& a, const FormSpace& b) {
  const int d = a.degree() + b.degree();
  EchelonBasis e(join_fields(a.field(), b.field()), d + 1);
  const auto ab = a.basis();
  const auto bb = b.basis();
  for (const auto& f : ab) {
    for (const auto& g : bb) {
      e.insert((f * g).coeffs());
      if (e.rank() == d + 1) return FormSpace::from_echelon(d, std::move(e));
    }
  }
  return FormSpace::from_echelon(d, std::move(e));
}

FormSpace space_power(const FormSpace& l, int k) {
  if (k <= 0) throw InvalidInput("space_power: exponent must be positive");
  PowerTower tower(l);
  return tower.power(k);
}

bool space_contains(const FormSpace& s, const BinaryForm& f) { return s.contains(f); }

PowerTower::PowerTower(FormSpace l) { powers_.push_back(std::move(l)); }

const FormSpace& PowerTower::power(int k) {
  if (k <= 0) throw InvalidInput("power of a form space must have a positive exponent");
  while (computed() < k) powers_.push_back(space_product(powers_.front(), powers_.back()));
  return powers_[static_cast<std::size_t>(k) - 1];
}

std::vector<int> orders_at(const FormSpace& s, const ProjPoint& q) {
  const int d = s.degree();
  if (q.is_infinity()) return s.pivots();
  FieldRef f = join_fields(s.field(), q.field());
  const FieldElement& alpha = q.alpha();
  // Substitute x -> x + alpha*y, then list columns from y^d down to x^d so that
  // the pivot of a row is the power of x dividing it.
  std::vector<FieldElement> apow{FieldElement(f, 1)};
  for (int i = 1; i <= d; ++i) apow.push_back(apow.back() * alpha);
  EchelonBasis e(f, d + 1);
  for (const auto& row : s.matrix()) {
    Row shifted(static_cast<std::size_t>(d) + 1, FieldElement(f));
    for (int j = 0; j <= d; ++j) {
      if (row[static_cast<std::size_t>(j)].is_zero()) continue;
      for (int jp = j; jp <= d; ++jp) {
        FieldElement term = row[static_cast<std::size_t>(j)] * apow[static_cast<std::size_t>(jp - j)] *
                            FieldElement(f, Rational(binomial(d - j, jp - j)));
        shifted[static_cast<std::size_t>(d - jp)] += term;
      }
    }
    e.insert(std::move(shifted));
  }
  return e.pivots();
}

bool basepoint_free(const FormSpace& l) {
  bool infinity_is_base = std::all_of(l.matrix().begin(), l.matrix().end(),
                                      [](const Row& r) { return r.front().is_zero(); });
  if (infinity_is_base) return false;
  UniPoly g;
  bool any = false;
  for (const auto& f : l.basis()) {
    UniPoly p = f.dehomogenize();
    g = any ? poly_gcd(g, p) : p.monic();
    any = true;
    if (g.is_constant()) return true;
  }
  return g.is_constant();
}

int genus_of(const FormSpace& l) {
  if (!basepoint_free(l)) throw PreconditionError("genus_of: the linear system has base points");
  const int d = l.degree();
  const int n = l.dim() - 1;
  const int k0 = std::max(2, d - n + 1);
  PowerTower tower(l);
  const int g0 = d * k0 + 1 - tower.power(k0).dim();
  const int g1 = d * (k0 + 1) + 1 - tower.power(k0 + 1).dim();
  if (g0 != g1) {
    throw InternalError("genus_of: Hilbert function not yet polynomial (" + std::to_string(g0) + " vs " +
                        std::to_string(g1) + ")");
  }
  return g0;
}

}  // namespace kfin
