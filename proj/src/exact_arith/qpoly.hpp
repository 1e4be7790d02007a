#pragma once

// Dense polynomials over Q as coefficient vectors, constant term first.
// Internal helpers shared by the number-field and root-finding code.

#include <utility>
#include <vector>

#include "kfin/rational.hpp"

namespace kfin::detail {

using QVec = std::vector<Rational>;

inline void strip_zeros(QVec& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

inline int deg(const QVec& v) { return static_cast<int>(v.size()) - 1; }

// a = quo * b + rem with deg rem < deg b; b nonzero.
inline void qdivmod(QVec a, const QVec& b, QVec& quo, QVec& rem) {
  quo.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  for (int i = deg(a); i >= deg(b); --i) {
    if (sgn(a[i]) == 0) continue;
    Rational q = a[i] / lead;
    int shift = i - deg(b);
    for (int j = 0; j <= deg(b); ++j) a[shift + j] -= q * b[j];
    quo[shift] = std::move(q);
  }
  if (a.size() >= b.size()) a.resize(b.size() - 1);
  strip_zeros(a);
  strip_zeros(quo);
  rem = std::move(a);
}

inline QVec qmul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  strip_zeros(out);
  return out;
}

inline QVec qsub(QVec a, const QVec& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  strip_zeros(a);
  return a;
}

inline QVec qderiv(const QVec& a) {
  QVec out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<long>(i));
  strip_zeros(out);
  return out;
}

// Monic gcd; zero when both inputs are zero.
inline QVec qgcd(QVec a, QVec b) {
  strip_zeros(a);
  strip_zeros(b);
  while (!b.empty()) {
    QVec q, r;
    qdivmod(std::move(a), b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational inv = 1 / a.back();
    for (auto& x : a) x *= inv;
  }
  return a;
}

}  // namespace kfin::detail
