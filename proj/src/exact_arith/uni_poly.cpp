#include "kfin/uni_poly.hpp"

#include <cstdint>
#include <sstream>

#include "kfin/errors.hpp"
#include "kfin/rational_roots.hpp"
#include "field_roots.hpp"

namespace kfin {

UniPoly::UniPoly(FieldRef field, std::vector<FieldElement> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (const auto& c : c_) field_ = join_fields(field_, c.is_rational() ? field_ : c.field());
  strip();
}

UniPoly UniPoly::from_rationals(const std::vector<Rational>& coeffs) {
  FieldRef q = NumberField::rationals();
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (const auto& r : coeffs) c.emplace_back(q, r);
  return UniPoly(q, std::move(c));
}

UniPoly UniPoly::constant(const FieldElement& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const FieldElement& c, int e) {
  std::vector<FieldElement> v(static_cast<std::size_t>(e) + 1, FieldElement(c.field()));
  v.back() = c;
  return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::linear_root(const FieldElement& r) {
  return UniPoly(r.field(), {-r, FieldElement(r.field(), 1)});
}

void UniPoly::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return FieldElement(field_);
  return c_[static_cast<std::size_t>(i)];
}

UniPoly UniPoly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return *this * leading().inverse();
}

UniPoly UniPoly::derivative() const {
  std::vector<FieldElement> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[static_cast<std::size_t>(i)] * FieldElement(field_, i));
  return UniPoly(field_, std::move(d));
}

FieldElement UniPoly::eval(const FieldElement& x) const {
  FieldElement acc(join_fields(field_, x.is_rational() ? field_ : x.field()));
  for (int i = degree(); i >= 0; --i) {
    acc *= x;
    acc += c_[static_cast<std::size_t>(i)];
  }
  return acc;
}

bool UniPoly::has_rational_coeffs() const {
  for (const auto& c : c_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

std::vector<Rational> UniPoly::rational_coeffs() const {
  std::vector<Rational> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.as_rational());
  return out;
}

UniPoly UniPoly::operator-() const {
  UniPoly out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  field_ = join_fields(field_, o.field_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElement(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  strip();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  field_ = join_fields(field_, o.field_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElement(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  strip();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  field_ = join_fields(field_, o.field_);
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<FieldElement> out(c_.size() + o.c_.size() - 1, FieldElement(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    FieldElement neg = -c_[i];
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j].sub_mul(neg, o.c_[j]);
  }
  c_ = std::move(out);
  strip();
  return *this;
}

UniPoly& UniPoly::operator*=(const FieldElement& c) {
  if (!c.is_rational()) field_ = join_fields(field_, c.field());
  for (auto& x : c_) x *= c;
  strip();
  return *this;
}

UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
UniPoly operator*(UniPoly a, const FieldElement& c) { return a *= c; }

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const FieldElement& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool negative = c.is_rational() && sgn(c.as_rational()) < 0;
    if (negative) cs = (-c).to_string();
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    bool unit = c.is_rational() && abs(c.as_rational()) == 1;
    if (i == 0) {
      os << cs;
    } else {
      if (!unit) os << cs << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  FieldRef f = join_fields(a.field(), b.field());
  if (a.degree() < b.degree()) return {UniPoly(f), a};
  std::vector<FieldElement> r = a.coeffs();
  std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, FieldElement(f));
  FieldElement inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (r[static_cast<std::size_t>(i)].is_zero()) continue;
    FieldElement qi = r[static_cast<std::size_t>(i)] * inv;
    int shift = i - b.degree();
    for (int j = 0; j <= b.degree(); ++j) r[static_cast<std::size_t>(shift + j)].sub_mul(qi, bc[static_cast<std::size_t>(j)]);
    q[static_cast<std::size_t>(shift)] = std::move(qi);
  }
  r.resize(static_cast<std::size_t>(b.degree()));
  return {UniPoly(f, std::move(q)), UniPoly(f, std::move(r))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("exact_div: " + b.to_string() + " does not divide " + a.to_string());
  return q;
}

namespace {

using ZVec = std::vector<Integer>;

void strip_z(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Primitive integer multiple of a nonzero rational polynomial.
ZVec primitive_integer(const std::vector<Rational>& c) {
  Integer den = 1;
  for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  ZVec out;
  Integer content = 0;
  for (const auto& x : c) {
    out.push_back(x.get_num() * (den / x.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  strip_z(out);
  if (content > 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  if (!out.empty() && out.back() < 0) {
    for (auto& x : out) x = -x;
  }
  return out;
}

// Degree of gcd(a, b) mod p, or -1 when p divides a leading coefficient.
int modular_gcd_degree(const ZVec& a, const ZVec& b, std::uint64_t p) {
  auto reduce = [p](const ZVec& v) {
    std::vector<std::uint64_t> out;
    for (const auto& x : v) out.push_back(mpz_fdiv_ui(x.get_mpz_t(), p));
    return out;
  };
  auto strip = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  auto inv = [p](std::uint64_t x) {
    std::uint64_t result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = result * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return result;
  };
  auto u = reduce(a), v = reduce(b);
  if (u.back() == 0 || v.back() == 0) return -1;
  while (!v.empty()) {
    const std::uint64_t li = inv(v.back());
    const std::size_t dv = v.size() - 1;
    while (u.size() >= v.size()) {
      const std::uint64_t q = u.back() * li % p;
      const std::size_t shift = u.size() - v.size();
      for (std::size_t j = 0; j <= dv; ++j) u[shift + j] = (u[shift + j] + (p - q) * v[j]) % p;
      strip(u);
      if (u.empty()) break;
    }
    std::swap(u, v);
  }
  return static_cast<int>(u.size()) - 1;
}

// Pseudo-remainder of a by b over Z.
ZVec pseudo_remainder(ZVec a, const ZVec& b) {
  const Integer& lb = b.back();
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    strip_z(a);
  }
  return a;
}

ZVec make_primitive(ZVec v) {
  Integer content = 0;
  for (const auto& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (content > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  return v;
}

// Monic gcd of two nonzero rational polynomials: a modular degree
// certificate first, then the primitive remainder sequence over Z.
UniPoly rational_gcd(const UniPoly& p, const UniPoly& q) {
  ZVec a = primitive_integer(p.rational_coeffs());
  ZVec b = primitive_integer(q.rational_coeffs());
  if (a.size() < b.size()) std::swap(a, b);
  for (std::uint64_t prime : {2147483647ULL, 2147483629ULL, 2147483587ULL}) {
    if (modular_gcd_degree(a, b, prime) == 0) return UniPoly::constant(FieldElement(NumberField::rationals(), 1));
  }
  while (!b.empty()) {
    ZVec r = make_primitive(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  std::vector<Rational> out(a.begin(), a.end());
  return UniPoly::from_rationals(out).monic();
}

}  // namespace

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.has_rational_coeffs() && q.has_rational_coeffs()) {
    UniPoly g = rational_gcd(p, q);
    FieldRef f = join_fields(p.field(), q.field());
    if (f->is_rational()) return g;
    std::vector<FieldElement> coeffs;
    for (const auto& c : g.coeffs()) coeffs.emplace_back(f, c.as_rational());
    return UniPoly(f, std::move(coeffs));
  }
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

XgcdResult poly_xgcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  FieldRef f = join_fields(p.field(), q.field());
  UniPoly r0 = p, r1 = q;
  UniPoly s0 = UniPoly::constant(FieldElement(f, 1)), s1(f);
  UniPoly t0(f), t1 = UniPoly::constant(FieldElement(f, 1));
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    UniPoly s2 = s0 - quo * s1;
    UniPoly t2 = t0 - quo * t1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  FieldElement inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return exact_div(p, poly_gcd(p, p.derivative())).monic();
}

namespace {

// Rational roots shared by every theta-component of p.
std::vector<Rational> rational_roots_over_field(const UniPoly& p) {
  int ell = p.field()->degree();
  std::vector<std::vector<Rational>> comps(static_cast<std::size_t>(ell));
  for (const auto& c : p.coeffs()) {
    const auto& res = c.residue();
    for (int j = 0; j < ell; ++j) {
      comps[static_cast<std::size_t>(j)].push_back(j < static_cast<int>(res.size()) ? res[static_cast<std::size_t>(j)] : Rational(0));
    }
  }
  UniPoly g;
  bool any = false;
  for (const auto& comp : comps) {
    UniPoly cp = UniPoly::from_rationals(comp);
    if (cp.is_zero()) continue;
    g = any ? poly_gcd(g, cp) : cp;
    any = true;
  }
  if (!any || g.is_constant()) return {};
  return rational_roots_of(g.rational_coeffs());
}

}  // namespace

std::vector<FieldElement> roots_in_field(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInput("roots of the zero polynomial");
  UniPoly rest = squarefree_part(p);
  if (!p.field()->is_rational() && rest.degree() >= 1) {
    if (auto roots = detail::number_field_roots(rest)) return *roots;
  }
  // Rational field, or no usable prime: rational roots plus a linear cofactor.
  std::vector<FieldElement> roots;
  for (const auto& r : rational_roots_over_field(rest)) {
    FieldElement root(p.field(), r);
    rest = exact_div(rest, UniPoly::linear_root(root));
    roots.push_back(std::move(root));
  }
  if (rest.degree() == 1) roots.push_back(-rest.coeff(0) / rest.coeff(1));
  return roots;
}

UniPoly unresolved_part(const UniPoly& p) {
  UniPoly rest = squarefree_part(p);
  for (const auto& r : roots_in_field(p)) rest = exact_div(rest, UniPoly::linear_root(r));
  return rest.monic();
}

}  // namespace kfin
