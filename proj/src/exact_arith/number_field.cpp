#include "kfin/number_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "kfin/errors.hpp"
#include "kfin/rational_roots.hpp"
#include "qpoly.hpp"

namespace kfin {

using detail::QVec;
using detail::deg;
using detail::qdivmod;
using detail::qmul;
using detail::qsub;
using detail::strip_zeros;

struct FieldRegistry {
  std::mutex mu;
  std::map<std::vector<Integer>, std::unique_ptr<NumberField>,
           bool (*)(const std::vector<Integer>&, const std::vector<Integer>&)>
      fields{[](const std::vector<Integer>& a, const std::vector<Integer>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
          int c = cmp(a[i], b[i]);
          if (c != 0) return c < 0;
        }
        return false;
      }};

  static FieldRegistry& instance() {
    static FieldRegistry reg;
    return reg;
  }

  FieldRef intern(const std::vector<Integer>& coeffs) {
    std::lock_guard lock(mu);
    auto it = fields.find(coeffs);
    if (it != fields.end()) return it->second.get();
    auto field = std::unique_ptr<NumberField>(new NumberField(coeffs));
    FieldRef ref = field.get();
    fields.emplace(coeffs, std::move(field));
    return ref;
  }
};

NumberField::NumberField(std::vector<Integer> coeffs) : minpoly_(std::move(coeffs)) {}

FieldRef NumberField::rationals() {
  static FieldRef q = FieldRegistry::instance().intern({Integer(0), Integer(1)});
  return q;
}

namespace {

// Cheap reducibility screen: rational roots, then monic integral quadratic
// factors t^2 + p t + q with q | c0 and |p| bounded by twice the Cauchy root bound.
void sanity_check_irreducible(const std::vector<Integer>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  if (d == 1) return;
  if (!rational_roots_of(c).empty()) {
    throw InvalidInput("minimal polynomial has a rational root; it is not irreducible");
  }
  if (d < 4) return;
  Integer bound = 0;
  for (int i = 0; i < d; ++i) {
    Integer a = abs(c[i]);
    if (a > bound) bound = a;
  }
  bound += 1;
  Integer c0 = abs(c[0]);
  if (bound > 2000 || c0 > 1000000) return;  // search too large; skip the screen
  long pmax = 2 * bound.get_si();
  std::vector<long> divisors;
  for (long q = 1; q <= c0.get_si(); ++q) {
    if (c0.get_si() % q == 0) {
      divisors.push_back(q);
      divisors.push_back(-q);
    }
  }
  for (long q : divisors) {
    for (long p = -pmax; p <= pmax; ++p) {
      // divide c by t^2 + p t + q over Z
      std::vector<Integer> rem(c.begin(), c.end());
      for (int i = d; i >= 2; --i) {
        Integer lead = rem[i];
        if (lead == 0) continue;
        rem[i] = 0;
        rem[i - 1] -= lead * p;
        rem[i - 2] -= lead * q;
      }
      if (rem[0] == 0 && rem[1] == 0) {
        throw InvalidInput("minimal polynomial has the quadratic factor t^2 + (" + std::to_string(p) +
                           ")t + (" + std::to_string(q) + ")");
      }
    }
  }
}

}  // namespace

FieldRef NumberField::from_minpoly(const std::vector<Integer>& coeffs) {
  std::vector<Integer> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.size() < 2) throw InvalidInput("minimal polynomial must be nonconstant");
  if (c.back() != 1) throw InvalidInput("minimal polynomial must be monic");
  // Any linear minimal polynomial presents Q.
  if (c.size() == 2) return rationals();
  {
    auto& reg = FieldRegistry::instance();
    std::lock_guard lock(reg.mu);
    auto it = reg.fields.find(c);
    if (it != reg.fields.end()) return it->second.get();
  }
  sanity_check_irreducible(c);
  return FieldRegistry::instance().intern(c);
}

std::string NumberField::describe() const {
  if (is_rational()) return "QQ";
  std::ostringstream os;
  os << "QQ[" << generator_name << "]/(";
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& a = minpoly_[i];
    if (a == 0) continue;
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    Integer m = abs(a);
    if (m != 1 || i == 0) os << m.get_str() << (i > 0 ? "*" : "");
    if (i > 0) os << generator_name;
    if (i > 1) os << "^" << i;
    first = false;
  }
  os << ")";
  return os.str();
}

FieldRef join_fields(FieldRef a, FieldRef b) {
  if (a == b) return a;
  if (a->is_rational()) return b;
  if (b->is_rational()) return a;
  throw InvalidInput("elements belong to different number fields: " + a->describe() + " and " +
                     b->describe());
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement() : field_(NumberField::rationals()) {}

FieldElement::FieldElement(FieldRef field) : field_(field) {}

FieldElement::FieldElement(FieldRef field, Rational value) : field_(field) {
  if (sgn(value) != 0) c_.push_back(std::move(value));
}

FieldElement::FieldElement(FieldRef field, std::vector<Rational> residue)
    : field_(field), c_(std::move(residue)) {
  reduce();
}

FieldElement FieldElement::generator(FieldRef field) {
  if (field->is_rational()) return FieldElement(field, Rational(0));
  return FieldElement(field, std::vector<Rational>{Rational(0), Rational(1)});
}

void FieldElement::strip() { strip_zeros(c_); }

void FieldElement::reduce() {
  strip();
  const int d = field_->degree();
  if (deg(c_) < d) return;
  const auto& m = field_->minpoly();
  for (int i = deg(c_); i >= d; --i) {
    if (sgn(c_[i]) == 0) continue;
    Rational lead = c_[i];
    c_[i] = 0;
    for (int j = 0; j < d; ++j) {
      if (m[j] != 0) c_[i - d + j] -= lead * m[j];
    }
  }
  c_.resize(d);
  strip();
}

Rational FieldElement::as_rational() const {
  if (!is_rational()) throw InvalidInput("field element " + to_string() + " is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

FieldRef FieldElement::common_field(const FieldElement& a, const FieldElement& b) {
  if (a.field_ == b.field_) return a.field_;
  if (a.is_rational() && a.field_->is_rational()) return b.field_;
  if (b.is_rational() && b.field_->is_rational()) return a.field_;
  return join_fields(a.field_, b.field_);
}

FieldElement FieldElement::operator-() const {
  FieldElement out(*this);
  for (auto& x : out.c_) x = -x;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  field_ = common_field(*this, o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  strip();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  field_ = common_field(*this, o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  strip();
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  field_ = common_field(*this, o);
  if (c_.empty()) return *this;
  if (o.c_.empty()) {
    c_.clear();
    return *this;
  }
  if (c_.size() == 1 && o.c_.size() == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  c_ = qmul(c_, o.c_);
  reduce();
  return *this;
}

void FieldElement::sub_mul(const FieldElement& a, const FieldElement& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  if (a.c_.size() == 1 && b.c_.size() == 1 && c_.size() <= 1) {
    FieldRef f = field_;
    for (FieldRef g : {a.field_, b.field_}) {
      if (g == f || g->is_rational()) continue;
      f = f->is_rational() ? g : join_fields(f, g);
    }
    field_ = f;
    static thread_local Rational tmp;
    mpq_mul(tmp.get_mpq_t(), a.c_[0].get_mpq_t(), b.c_[0].get_mpq_t());
    if (c_.empty()) {
      c_.push_back(-tmp);
    } else {
      mpq_sub(c_[0].get_mpq_t(), c_[0].get_mpq_t(), tmp.get_mpq_t());
    }
    strip();
    return;
  }
  *this -= a * b;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero");
  if (c_.size() == 1) return FieldElement(field_, 1 / c_[0]);
  // Extended Euclid: find s with s*c == 1 mod minpoly.
  QVec m(field_->minpoly().begin(), field_->minpoly().end());
  QVec r0 = m, r1 = c_;
  QVec s0, s1{Rational(1)};
  while (!r1.empty()) {
    QVec q, r;
    qdivmod(r0, r1, q, r);
    QVec s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (deg(r0) != 0) {
    throw InvalidInput("element " + to_string() + " is a zero divisor; " + field_->describe() +
                       " is not a field");
  }
  Rational inv = 1 / r0[0];
  for (auto& x : s0) x *= inv;
  return FieldElement(field_, std::move(s0));
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result(field_, Rational(1));
  FieldElement base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.c_ != b.c_) return false;
  if (a.field_ == b.field_ || a.is_rational()) return true;
  return false;
}

std::string FieldElement::to_string() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return kfin::to_string(c_[0]);
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int i = deg(c_); i >= 0; --i) {
    const Rational& a = c_[i];
    if (sgn(a) == 0) continue;
    if (!first) os << (sgn(a) < 0 ? " - " : " + ");
    else if (sgn(a) < 0) os << "-";
    Rational m = abs(a);
    if (i == 0) {
      os << kfin::to_string(m);
    } else {
      if (m != 1) os << kfin::to_string(m) << "*";
      os << NumberField::generator_name;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  os << ")";
  return os.str();
}

FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

}  // namespace kfin
