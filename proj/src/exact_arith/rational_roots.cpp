#include "kfin/rational_roots.hpp"

#include <algorithm>
#include <tuple>

#include "kfin/errors.hpp"
#include "qpoly.hpp"

// Roots are found p-adically: pick a prime p for which the squarefree part
// stays squarefree and keeps its degree, find the roots modulo p by
// exhaustion, Newton-lift them until the modulus exceeds 2|c0||lc|, and
// recover each candidate by rational reconstruction. Every candidate is
// verified exactly, so a bad reconstruction can only drop a non-root.

namespace kfin {

namespace {

using detail::QVec;
using ZVec = std::vector<Integer>;

// Primitive integer polynomial with positive leading coefficient.
ZVec primitive_part(const QVec& q) {
  Integer den = 1;
  for (const auto& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZVec z;
  z.reserve(q.size());
  Integer content = 0;
  for (const auto& c : q) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    z.push_back(std::move(v));
  }
  if (z.back() < 0) content = -content;
  for (auto& v : z) v /= content;
  return z;
}

long mod_eval(const ZVec& f, long x, long p) {
  long acc = 0;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    long c = mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p));
    acc = static_cast<long>((static_cast<__int128>(acc) * x + c) % p);
  }
  return acc;
}

using LVec = std::vector<long>;

long mod_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return t < 0 ? t + p : t;
}

void lstrip(LVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Degree of gcd(a, b) over F_p.
int mod_gcd_degree(LVec a, LVec b, long p) {
  lstrip(a);
  lstrip(b);
  while (!b.empty()) {
    long inv = mod_inv(b.back(), p);
    while (a.size() >= b.size()) {
      long q = static_cast<long>(static_cast<__int128>(a.back()) * inv % p);
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[shift + j] = static_cast<long>(((a[shift + j] - static_cast<__int128>(q) * b[j]) % p + p) % p);
      }
      lstrip(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

bool squarefree_mod(const ZVec& f, long p) {
  LVec a, da;
  for (std::size_t i = 0; i < f.size(); ++i) {
    a.push_back(static_cast<long>(mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p))));
  }
  for (std::size_t i = 1; i < a.size(); ++i) da.push_back(static_cast<long>((static_cast<__int128>(a[i]) * static_cast<long>(i)) % p));
  lstrip(da);
  if (da.empty()) return false;
  return mod_gcd_degree(a, da, p) == 0;
}

Integer eval_mod(const ZVec& f, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    acc = acc * x + f[i];
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

// a/b with |a| <= bound_a, 0 < b <= bound_b and a == b*r mod m, if any.
bool reconstruct(const Integer& r, const Integer& m, const Integer& bound_a, const Integer& bound_b, Rational& out) {
  Integer r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > bound_a) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound_b) return false;
  out = Rational(r1, t1);
  out.canonicalize();
  return true;
}

bool is_root(const ZVec& f, const Rational& x) {
  // sum f_i a^i b^(n-i) == 0
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = 0;
  Integer bpow = 1;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    acc = acc * a + f[i] * bpow;
    bpow *= b;
  }
  return acc == 0;
}

}  // namespace

std::vector<Rational> rational_roots_of(const std::vector<Rational>& coeffs) {
  QVec q = coeffs;
  detail::strip_zeros(q);
  if (q.empty()) throw InvalidInput("rational_roots_of: zero polynomial");
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (sgn(q[low]) == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    q.erase(q.begin(), q.begin() + static_cast<long>(low));
  }
  if (q.size() > 2) {
    QVec g = detail::qgcd(q, detail::qderiv(q));
    if (g.size() > 1) {
      QVec quo, rem;
      detail::qdivmod(q, g, quo, rem);
      q = std::move(quo);
    }
  }
  if (q.size() == 2) {
    roots.push_back(-q[0] / q[1]);
  } else if (q.size() > 2) {
    ZVec f = primitive_part(q);
    Integer p_z = 100;
    long p = 0;
    for (;;) {
      mpz_nextprime(p_z.get_mpz_t(), p_z.get_mpz_t());
      if (!p_z.fits_slong_p() || p_z > Integer(1) << 30) {
        throw InternalError("rational_roots_of: no suitable prime found");
      }
      p = p_z.get_si();
      if (mpz_fdiv_ui(f.back().get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
      if (squarefree_mod(f, p)) break;
    }
    ZVec df;
    for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<long>(i));
    Integer bound_a = abs(f.front());
    Integer bound_b = abs(f.back());
    Integer target = 2 * bound_a * bound_b;
    for (long x = 0; x < p; ++x) {
      if (mod_eval(f, x, p) != 0) continue;
      Integer r = x;
      Integer m = p;
      while (m <= target) {
        m *= m;
        Integer fv = eval_mod(f, r, m);
        Integer dv = eval_mod(df, r, m);
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t()) == 0) {
          throw InternalError("rational_roots_of: derivative not invertible during lifting");
        }
        r = r - fv * inv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
      }
      Rational cand;
      if (reconstruct(r, m, bound_a, bound_b, cand) && is_root(f, cand)) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Rational> rational_roots_of(const std::vector<Integer>& coeffs) {
  return rational_roots_of(std::vector<Rational>(coeffs.begin(), coeffs.end()));
}

}  // namespace kfin
