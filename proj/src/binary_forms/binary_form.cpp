#include "kfin/binary_form.hpp"

#include <algorithm>
#include <sstream>

#include "kfin/errors.hpp"

namespace kfin {

BinaryForm::BinaryForm(FieldRef field, int degree) : field_(field) {
  if (degree < 0) throw InvalidInput("binary form of negative degree");
  c_.assign(static_cast<std::size_t>(degree) + 1, FieldElement(field));
}

BinaryForm::BinaryForm(FieldRef field, std::vector<FieldElement> coeffs) : field_(field), c_(std::move(coeffs)) {
  if (c_.empty()) throw InvalidInput("binary form needs at least one coefficient");
  for (const auto& x : c_) {
    if (!x.is_rational()) field_ = join_fields(field_, x.field());
  }
}

BinaryForm BinaryForm::monomial(int degree, int j, const FieldElement& c) {
  if (j < 0 || j > degree) throw InvalidInput("monomial index out of range");
  BinaryForm f(c.field(), degree);
  f.c_[static_cast<std::size_t>(j)] = c;
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (o.degree() != degree()) throw InvalidInput("adding binary forms of different degrees");
  field_ = join_fields(field_, o.field_);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
  if (o.degree() != degree()) throw InvalidInput("subtracting binary forms of different degrees");
  field_ = join_fields(field_, o.field_);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

BinaryForm& BinaryForm::operator*=(const FieldElement& c) {
  if (!c.is_rational()) field_ = join_fields(field_, c.field());
  for (auto& x : c_) x *= c;
  return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  FieldRef f = join_fields(a.field_, b.field_);
  BinaryForm out(f, a.degree() + b.degree());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    const FieldElement neg = -a.c_[i];
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (!b.c_[j].is_zero()) out.c_[i + j].sub_mul(neg, b.c_[j]);
    }
  }
  return out;
}

BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
BinaryForm operator*(BinaryForm a, const FieldElement& c) { return a *= c; }

FieldElement BinaryForm::eval(const FieldElement& x, const FieldElement& y) const {
  FieldElement acc(field_);
  const int d = degree();
  for (int j = 0; j <= d; ++j) {
    if (c_[static_cast<std::size_t>(j)].is_zero()) continue;
    acc += c_[static_cast<std::size_t>(j)] * x.pow(d - j) * y.pow(j);
  }
  return acc;
}

UniPoly BinaryForm::dehomogenize() const {
  std::vector<FieldElement> coeffs(c_.rbegin(), c_.rend());
  return UniPoly(field_, std::move(coeffs));
}

std::string BinaryForm::to_string() const {
  std::ostringstream os;
  const int d = degree();
  bool first = true;
  for (int j = 0; j <= d; ++j) {
    const FieldElement& c = c_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    bool negative = c.is_rational() && sgn(c.as_rational()) < 0;
    FieldElement mag = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    bool has_var = d > 0;
    bool wrote = false;
    if (!mag.is_one() || !has_var) {
      os << mag.to_string();
      wrote = true;
    }
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (wrote) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      wrote = true;
    };
    var("x", d - j);
    var("y", j);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

ProjPoint::ProjPoint(const FieldElement& alpha, const FieldElement& beta) {
  if (alpha.is_zero() && beta.is_zero()) throw InvalidInput("(0:0) is not a point of P^1");
  FieldRef f = join_fields(alpha.is_rational() ? NumberField::rationals() : alpha.field(),
                           beta.is_rational() ? NumberField::rationals() : beta.field());
  if (beta.is_zero()) {
    alpha_ = FieldElement(f, 1);
    beta_ = FieldElement(f);
  } else {
    alpha_ = alpha / beta;
    beta_ = FieldElement(f, 1);
  }
}

ProjPoint ProjPoint::finite(const FieldElement& alpha) {
  return ProjPoint(alpha, FieldElement(alpha.field(), 1));
}

ProjPoint ProjPoint::infinity() {
  FieldRef q = NumberField::rationals();
  return ProjPoint(FieldElement(q, 1), FieldElement(q));
}

ProjPoint ProjPoint::rational(const Rational& alpha, const Rational& beta) {
  FieldRef q = NumberField::rationals();
  return ProjPoint(FieldElement(q, alpha), FieldElement(q, beta));
}

FieldRef ProjPoint::field() const {
  return alpha_.is_rational() ? NumberField::rationals() : alpha_.field();
}

std::string ProjPoint::to_string() const { return "(" + alpha_.to_string() + ":" + beta_.to_string() + ")"; }

BinaryForm linear_power(const ProjPoint& q, int m) {
  if (m < 0) throw InvalidInput("linear_power: negative exponent");
  FieldRef f = q.field();
  std::vector<FieldElement> c;
  c.reserve(static_cast<std::size_t>(m) + 1);
  const FieldElement neg_alpha = -q.alpha();
  if (q.is_infinity()) {
    // (-y)^m
    for (int i = 0; i < m; ++i) c.emplace_back(f);
    c.emplace_back(f, (m % 2 == 0) ? 1 : -1);
    return BinaryForm(f, std::move(c));
  }
  // beta = 1: sum_i C(m,i) (-alpha)^i x^(m-i) y^i
  FieldElement power(f, 1);
  for (int i = 0; i <= m; ++i) {
    c.push_back(power * FieldElement(f, Rational(binomial(m, i))));
    power *= neg_alpha;
  }
  return BinaryForm(f, std::move(c));
}

}  // namespace kfin
