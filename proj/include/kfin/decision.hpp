#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kfin/binary_form.hpp"
#include "kfin/form_space.hpp"
#include "kfin/rational.hpp"
#include "kfin/uni_poly.hpp"

namespace kfin {

inline constexpr long kDefaultCap = 10000;

enum class Outcome { KF, NotKF, Undecided };
std::string to_string(Outcome o);

struct TraceEntry {
  long k;
  bool member;
};

// A Khovanskii-finite point found without being given: either explicit, or
// every root of an irreducible-over-F factor in the affine coordinate p of
// Q = (p:1).
struct WitnessPoint {
  std::optional<ProjPoint> point;
  std::optional<UniPoly> factor;
  long k = 0;
  std::string describe() const;
};

struct Verdict {
  Outcome outcome = Outcome::Undecided;
  // KF: least witness k. NotKF: the bound exhausted. Undecided: the cap.
  long k = 0;
  // Bound on k that makes the search conclusive (general or per-family value).
  Integer bound_used;
  std::optional<ProjPoint> point;
  std::vector<WitnessPoint> witnesses;
  std::vector<TraceEntry> trace;
};

// (beta x - alpha y)^(dk) in L^k.
bool membership(const FormSpace& l, const ProjPoint& q, int k);
bool membership(PowerTower& tower, const ProjPoint& q, int k);

// max{2(d-n-1), ((96 d^3 ell)^2 + 2)^2}.
Integer general_bound(long d, long n, long ell);

// Iterates membership for k = 1..min(bound, cap). Throws PreconditionError
// unless genus_of(l) == 2. cap = nullopt removes the cap.
Verdict decide_point(const FormSpace& l, const ProjPoint& q, long ell, std::optional<long> cap = kDefaultCap);

// Supplies L^k for k >= 1; lets callers substitute closed-form bases.
using PowerSource = std::function<FormSpace(int k)>;

struct AnyValuationOptions {
  std::optional<long> cap = kDefaultCap;
  // Replaces the general bound, e.g. by a per-family table value.
  std::optional<Integer> bound;
  // Defaults to iterated products of l.
  PowerSource powers;
};

// Searches every Q at once: reduces (x - t y)^(dk) against L^k symbolically
// and takes the gcd of the residual coefficients; (1:0) is tested through
// y^(dk). Never returns NotKF unless genus_of(l) == 2.
Verdict any_valuation(const FormSpace& l, long ell, const AnyValuationOptions& options = {});

// Residual polynomials of (x - t y)^(dk) modulo the echelon basis of lk,
// one per non-pivot column. Exposed for tests.
std::vector<UniPoly> symbolic_residuals(const FormSpace& lk);

// True when the verdict's witness k replays as membership for its point.
bool replay(const FormSpace& l, const Verdict& v);

struct SemigroupReport {
  int degree = 0;   // d
  int k_max = 0;
  // Lambda_k for k = 1..k_max.
  std::vector<std::vector<int>> orders;
  // Pairs (d*k, m), minimal among recorded pairs, in graded-lex order.
  std::vector<std::pair<long, long>> generators;
  // Least k <= k_max with (beta x - alpha y)^(dk) in L^k, if any.
  std::optional<long> kf_witness;
  // False only when a witness lies in range and degree k_max added no generator.
  bool truncated = true;
  int group_rank = 0;
};

SemigroupReport value_semigroup(const FormSpace& l, const ProjPoint& q, int k_max);

// Whether d lies in orders_at(l, q). Throws PreconditionError when
// 2 * genus > d, and InvalidInput when the orders at q contradict a
// unibranch singular preimage (0 missing or 1 present).
bool unibranch_kf(const FormSpace& l, const ProjPoint& q);

}  // namespace kfin
