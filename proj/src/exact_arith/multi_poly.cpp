#include "kfin/multi_poly.hpp"

#include <algorithm>
#include <sstream>

#include "kfin/bareiss.hpp"
#include "kfin/errors.hpp"

namespace kfin {

namespace {

int total(const Monomial& m) {
  int s = 0;
  for (int e : m) s += e;
  return s;
}

}  // namespace

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int ta = total(a), tb = total(b);
  if (ta != tb) return ta > tb;
  return a > b;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Monomial(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::string_view name) {
  MultiPoly p(std::move(vars));
  int i = p.var_index(name);
  if (i < 0) throw InvalidInput("unknown variable '" + std::string(name) + "'");
  Monomial m(p.vars_.size(), 0);
  m[static_cast<std::size_t>(i)] = 1;
  p.add_term(m, Rational(1));
  return p;
}

int MultiPoly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0); }

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : total(terms_.begin()->first); }

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(var)]);
  return d;
}

const Rational& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw InvalidInput("polynomials live in different rings");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  check_ring(o);
  MultiPoly out(vars_);
  Monomial prod(vars_.size());
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
      out.add_term(prod, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw InvalidInput("negative power of a polynomial");
  MultiPoly result = constant(vars_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1, MultiPoly(vars_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int e = rest[static_cast<std::size_t>(var)];
    rest[static_cast<std::size_t>(var)] = 0;
    out[static_cast<std::size_t>(e)].add_term(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  check_ring(value);
  auto coeffs = coefficients_in(var);
  MultiPoly out(vars_);
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    out *= value;
    out += coeffs[static_cast<std::size_t>(i)];
  }
  return out;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw InvalidInput("evaluation point has the wrong arity");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

UniPoly MultiPoly::specialize_to_univariate(int var, const std::vector<Rational>& point) const {
  auto coeffs = coefficients_in(var);
  std::vector<Rational> out;
  std::vector<Rational> pt = point;
  pt[static_cast<std::size_t>(var)] = 0;
  for (const auto& c : coeffs) out.push_back(c.eval(pt));
  return UniPoly::from_rationals(out);
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  Integer den = 1, num = 0;
  for (const auto& [m, c] : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (sgn(leading_coeff()) < 0) scale = -scale;
  return *this * scale;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    bool any_var = total(m) > 0;
    bool wrote = false;
    if (mag != 1 || !any_var) {
      os << kfin::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_[i];
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (a.vars() != b.vars()) throw InvalidInput("polynomials live in different rings");
  MultiPoly rem = a;
  MultiPoly quo(a.vars());
  const auto& [lead_m, lead_c] = *b.terms().begin();
  Monomial shift(lead_m.size());
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().begin();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = rm[i] - lead_m[i];
      if (shift[i] < 0) throw InternalError("divide_exact: divisor does not divide dividend");
    }
    Rational q = rc / lead_c;
    MultiPoly term(a.vars());
    term.add_term(shift, q);
    quo.add_term(shift, q);
    rem -= term * b;
  }
  return quo;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  if (p.vars() != q.vars()) throw InvalidInput("polynomials live in different rings");
  int v = p.var_index(var);
  if (v < 0) throw InvalidInput("resultant: unknown variable '" + std::string(var) + "'");
  int m = p.degree_in(v), n = q.degree_in(v);
  if (m <= 0 && n <= 0) throw InvalidInput("resultant: variable '" + std::string(var) + "' absent from both inputs");
  if (p.is_zero() || q.is_zero()) return MultiPoly(p.vars());
  auto pc = p.coefficients_in(v);
  auto qc = q.coefficients_in(v);
  const std::size_t size = static_cast<std::size_t>(m + n);
  MultiPoly zero(p.vars());
  std::vector<std::vector<MultiPoly>> syl(size, std::vector<MultiPoly>(size, zero));
  // Row i < n holds p shifted by i, row n + j holds q shifted by j, leading coefficient first.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) syl[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = pc[static_cast<std::size_t>(m - j)];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) syl[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = qc[static_cast<std::size_t>(n - j)];
  }
  return bareiss_determinant(
      std::move(syl), MultiPoly::constant(p.vars(), Rational(1)), zero,
      [](const MultiPoly& x) { return x.is_zero(); },
      [](const MultiPoly& a, const MultiPoly& b) { return divide_exact(a, b); });
}

FieldElement resultant(const UniPoly& p, const UniPoly& q) {
  FieldRef f = join_fields(p.field(), q.field());
  if (p.is_zero() || q.is_zero()) return FieldElement(f);
  int m = p.degree(), n = q.degree();
  if (m == 0 && n == 0) return FieldElement(f, 1);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<FieldElement>> syl(size, std::vector<FieldElement>(size, FieldElement(f)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) syl[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = p.coeff(m - j);
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) syl[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = q.coeff(n - j);
  }
  return bareiss_determinant(
      std::move(syl), FieldElement(f, 1), FieldElement(f),
      [](const FieldElement& x) { return x.is_zero(); },
      [](const FieldElement& a, const FieldElement& b) { return a / b; });
}

bool equal_up_to_scalar(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.vars() != b.vars() || a.term_count() != b.term_count()) return false;
  Rational scale = b.leading_coeff() / a.leading_coeff();
  return a * scale == b;
}

}  // namespace kfin
