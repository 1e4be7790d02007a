#include "field_roots.hpp"

#include <algorithm>
#include <cstdint>

#include "kfin/errors.hpp"

// Roots of p in F = Q(theta) are found P-adically at a prime P where the
// minimal polynomial m splits into distinct linear factors. Write p monic
// with coefficients in Z[theta] after the substitution t = u / lc; its roots
// u are algebraic integers, so the trace vector s_k = Tr(u theta^k) is
// integral and disc(m) * coords(u) = adj(T) s with T the trace form. The
// size of s is bounded through the Cauchy bound in every embedding, which
// fixes the P-adic precision. Each embedding theta -> theta_j (mod P^e) maps
// a root u to a root of the j-th conjugate; a tuple of such roots determines
// coords(u) through the Vandermonde system in the theta_j. All candidates
// are verified exactly.

namespace kfin::detail {

namespace {

using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;

constexpr long kMaxPrime = 200000;
constexpr std::size_t kMaxTuples = 20000;

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inv_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw InternalError("non-invertible residue");
  return r;
}

Integer eval_mod(const ZVec& f, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = mod(acc * x + f[i], m);
  return acc;
}

ZVec derivative(const ZVec& f) {
  ZVec out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<long>(i));
  return out;
}

// Newton iteration from a simple root modulo P to a root modulo big = P^e.
Integer lift_root(const ZVec& f, Integer x, const Integer& big, int iterations) {
  const ZVec df = derivative(f);
  for (int i = 0; i < iterations; ++i) {
    Integer fx = eval_mod(f, x, big);
    if (fx == 0) break;
    x = mod(x - fx * inv_mod(eval_mod(df, x, big), big), big);
  }
  return x;
}

// Degree of gcd(f, f') modulo a small prime.
int mod_gcd_degree_with_derivative(const ZVec& f, long p) {
  auto reduce = [p](const ZVec& v) {
    std::vector<std::int64_t> out;
    for (const auto& x : v) out.push_back(static_cast<std::int64_t>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p))));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  };
  auto inv = [p](std::int64_t a) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return t < 0 ? t + p : t;
  };
  auto a = reduce(f), b = reduce(derivative(f));
  if (b.empty()) return static_cast<int>(a.size()) - 1;
  while (!b.empty()) {
    const std::int64_t li = inv(b.back());
    while (a.size() >= b.size()) {
      const std::int64_t c = a.back() * li % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

std::vector<Integer> roots_mod_small(const ZVec& f, long p) {
  std::vector<Integer> out;
  const Integer pp = p;
  for (long x = 0; x < p; ++x) {
    if (eval_mod(f, Integer(x), pp) == 0) out.emplace_back(x);
  }
  return out;
}

// Power sums of the roots of monic m, n = 0..count-1, by Newton's identities.
ZVec power_sums(const ZVec& m, int count) {
  const int ell = static_cast<int>(m.size()) - 1;
  ZVec s(static_cast<std::size_t>(count), Integer(0));
  // e-coefficients: m = t^ell + m_{ell-1} t^{ell-1} + ... ; c_i = m_{ell-i}
  auto c = [&](int i) -> Integer { return i <= ell ? m[static_cast<std::size_t>(ell - i)] : Integer(0); };
  if (count > 0) s[0] = ell;
  for (int n = 1; n < count; ++n) {
    Integer acc = 0;
    for (int i = 1; i < n && i <= ell; ++i) acc += c(i) * s[static_cast<std::size_t>(n - i)];
    if (n <= ell) acc += c(n) * n;
    s[static_cast<std::size_t>(n)] = -acc;
  }
  return s;
}

// Inverse and determinant of an integer matrix over Q.
bool invert(const ZMat& a, std::vector<std::vector<Rational>>& inv, Rational& det) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return false;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    Rational p = m[col][col];
    det *= p;
    for (auto& x : m[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  inv.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  }
  return true;
}

// Solves V x = rhs modulo big with V[j][i] = theta_j^i.
std::vector<Integer> solve_vandermonde(const std::vector<std::vector<Integer>>& vinv, const std::vector<Integer>& rhs,
                                       const Integer& big) {
  std::vector<Integer> x(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < rhs.size(); ++j) acc += vinv[i][j] * rhs[j];
    x[i] = mod(acc, big);
  }
  return x;
}

bool invert_mod(std::vector<std::vector<Integer>> a, const Integer& big, std::vector<std::vector<Integer>>& inv) {
  const std::size_t n = a.size();
  inv.assign(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && mpz_invert(Integer().get_mpz_t(), a[piv][col].get_mpz_t(), big.get_mpz_t()) == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Integer pinv = inv_mod(a[col][col], big);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = mod(a[col][j] * pinv, big);
      inv[col][j] = mod(inv[col][j] * pinv, big);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Integer f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = mod(a[r][j] - f * a[col][j], big);
        inv[r][j] = mod(inv[r][j] - f * inv[col][j], big);
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<FieldElement>> number_field_roots(const UniPoly& p) {
  const FieldRef f = p.field();
  const int ell = f->degree();
  const int deg = p.degree();
  if (ell < 2 || deg < 1) throw InternalError("number_field_roots expects a proper extension");
  if (deg == 1) return std::vector<FieldElement>{-p.coeff(0) / p.coeff(1)};

  const ZVec m(f->minpoly().begin(), f->minpoly().end());

  // Clear denominators so every coefficient lies in Z[theta].
  Integer den = 1;
  for (const auto& c : p.coeffs()) {
    for (const auto& r : c.residue()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
  }
  std::vector<FieldElement> a;
  for (const auto& c : p.coeffs()) a.push_back(c * FieldElement(f, Rational(den)));
  const FieldElement lc = a.back();

  // q(u) = lc^(deg-1) p(u / lc): monic with coefficients in Z[theta].
  std::vector<ZVec> qc(static_cast<std::size_t>(deg) + 1, ZVec(static_cast<std::size_t>(ell), Integer(0)));
  FieldElement lc_pow(f, 1);
  for (int i = deg - 1; i >= 0; --i) {
    FieldElement v = a[static_cast<std::size_t>(i)] * lc_pow;
    const auto& res = v.residue();
    for (std::size_t k = 0; k < res.size(); ++k) {
      if (res[k].get_den() != 1) throw InternalError("non-integral coefficient after scaling");
      qc[static_cast<std::size_t>(i)][k] = res[k].get_num();
    }
    lc_pow *= lc;
  }
  qc[static_cast<std::size_t>(deg)][0] = 1;

  // Trace form and the coordinate bound.
  const ZVec sums = power_sums(m, 2 * ell - 1);
  ZMat trace(static_cast<std::size_t>(ell), ZVec(static_cast<std::size_t>(ell)));
  for (int i = 0; i < ell; ++i) {
    for (int k = 0; k < ell; ++k) trace[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = sums[static_cast<std::size_t>(i + k)];
  }
  std::vector<std::vector<Rational>> tinv;
  Rational det;
  if (!invert(trace, tinv, det)) throw InternalError("degenerate trace form");
  const Integer disc = abs(det.get_num());
  Rational tnorm = 0;
  for (const auto& row : tinv) {
    Rational s = 0;
    for (const auto& x : row) s += abs(x);
    tnorm = std::max(tnorm, s);
  }
  Integer root_bound = 1;  // Cauchy bound for roots of m
  for (int i = 0; i < ell; ++i) root_bound = std::max(root_bound, Integer(1 + abs(m[static_cast<std::size_t>(i)])));
  Integer coeff_bound = 0;
  for (int i = 0; i < deg; ++i) {
    Integer s = 0, rk = 1;
    for (int k = 0; k < ell; ++k) {
      s += abs(qc[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) * rk;
      rk *= root_bound;
    }
    coeff_bound = std::max(coeff_bound, s);
  }
  Integer u_bound = coeff_bound + 1;
  Integer r_pow = 1;
  for (int k = 1; k < ell; ++k) r_pow *= root_bound;
  const Rational trace_bound = Rational(u_bound * r_pow * ell);
  Rational c_bound = trace_bound * tnorm * Rational(disc);
  const Integer coord_bound = c_bound.get_num() / c_bound.get_den() + 1;

  for (long prime = 101; prime <= kMaxPrime; ++prime) {
    if (!is_prime(prime)) continue;
    if (mpz_fdiv_ui(disc.get_mpz_t(), static_cast<unsigned long>(prime)) == 0) continue;
    auto thetas = roots_mod_small(m, prime);
    if (static_cast<int>(thetas.size()) != ell) continue;

    // Conjugates of q modulo P must stay squarefree.
    const Integer pp = prime;
    auto conj = [&](const Integer& th, const Integer& modulus) {
      ZVec out;
      for (const auto& c : qc) {
        Integer v = 0, pw = 1;
        for (const auto& x : c) {
          v += x * pw;
          pw = mod(pw * th, modulus);
        }
        out.push_back(mod(v, modulus));
      }
      return out;
    };
    bool ok = true;
    std::vector<std::vector<Integer>> small_roots;
    for (const auto& th : thetas) {
      ZVec qj = conj(th, pp);
      if (mod_gcd_degree_with_derivative(qj, prime) != 0) {
        ok = false;
        break;
      }
      small_roots.push_back(roots_mod_small(qj, prime));
      if (small_roots.back().empty()) return std::vector<FieldElement>{};
    }
    if (!ok) continue;
    std::size_t tuples = 1;
    for (const auto& r : small_roots) {
      tuples *= r.size();
      if (tuples > kMaxTuples) return std::nullopt;
    }

    Integer big = prime;
    int e = 1;
    while (big <= 2 * coord_bound) {
      big *= prime;
      ++e;
    }
    int iterations = 1;
    for (int reach = 1; reach < e; reach *= 2) ++iterations;

    std::vector<Integer> lifted_theta;
    std::vector<std::vector<Integer>> lifted_roots;
    for (std::size_t j = 0; j < thetas.size(); ++j) {
      lifted_theta.push_back(lift_root(m, thetas[j], big, iterations));
      ZVec qj = conj(lifted_theta.back(), big);
      std::vector<Integer> lr;
      for (const auto& r : small_roots[j]) lr.push_back(lift_root(qj, r, big, iterations));
      lifted_roots.push_back(std::move(lr));
    }
    std::vector<std::vector<Integer>> vander(thetas.size(), std::vector<Integer>(thetas.size()));
    for (std::size_t j = 0; j < thetas.size(); ++j) {
      Integer pw = 1;
      for (std::size_t i = 0; i < thetas.size(); ++i) {
        vander[j][i] = pw;
        pw = mod(pw * lifted_theta[j], big);
      }
    }
    std::vector<std::vector<Integer>> vinv;
    if (!invert_mod(vander, big, vinv)) throw InternalError("Vandermonde system singular modulo P");

    std::vector<FieldElement> roots;
    std::vector<std::size_t> idx(thetas.size(), 0);
    const Integer half = big / 2;
    for (;;) {
      std::vector<Integer> rhs;
      for (std::size_t j = 0; j < idx.size(); ++j) rhs.push_back(mod(lifted_roots[j][idx[j]] * disc, big));
      std::vector<Integer> coords = solve_vandermonde(vinv, rhs, big);
      bool small = true;
      std::vector<Rational> residue;
      for (auto& c : coords) {
        if (c > half) c -= big;
        if (abs(c) > coord_bound) {
          small = false;
          break;
        }
        residue.emplace_back(c, disc);
        residue.back().canonicalize();
      }
      if (small) {
        FieldElement r = FieldElement(f, residue) / lc;
        if (p.eval(r).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == lifted_roots[pos].size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
    return roots;
  }
  return std::nullopt;
}

}  // namespace kfin::detail
