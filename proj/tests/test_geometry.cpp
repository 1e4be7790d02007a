#include <gtest/gtest.h>

#include "kfin/center.hpp"
#include "kfin/errors.hpp"
#include "kfin/singularities.hpp"
#include "kfin/strata.hpp"
#include "support.hpp"

namespace kfin {
namespace {

using testing::form;
using testing::Gen;
using testing::q;
using testing::QQ;

Row row(const std::vector<long>& v) {
  Row r;
  for (long x : v) r.push_back(q(x));
  return r;
}

CenterLine tacnode_center() { return CenterLine(5, {row({1, 0, 0, 0, 0, 1}), row({0, 1, 0, 0, 1, 0})}); }

TEST(Center, QuinticCenterMatchesWorkedExample) {
  CenterLine u = center_of(testing::quintic());
  EXPECT_EQ(u, CenterLine(5, {row({1, 0, 0, 0, 0, 1}), row({5, 1, 0, 0, 0, 0})}));
}

TEST(Center, TacnodeCenterGivesRepresentativeSpace) {
  StratumParams p;
  p.a = q(1);
  p.b = q(0);
  EXPECT_EQ(space_of(tacnode_center()), stratum_space(StratumId::Tacnode, p));
}

TEST(Center, RoundTripOnRandomCodimensionTwoSpaces) {
  Gen g(9);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = static_cast<int>(g.integer(3, 7));
    std::vector<BinaryForm> gens;
    for (int i = 0; i < d - 1; ++i) gens.push_back(g.binary_form(QQ(), d));
    FormSpace l(d, gens);
    if (l.dim() != d - 1) continue;
    CenterLine u = center_of(l);
    EXPECT_EQ(space_of(u), l);
    for (const auto& b : l.basis()) {
      for (const auto& ur : u.matrix()) {
        FieldElement dot(QQ());
        for (int j = 0; j <= d; ++j) dot += b.coeff(j) * ur[static_cast<std::size_t>(j)];
        EXPECT_TRUE(dot.is_zero());
      }
    }
  }
  EXPECT_THROW(center_of(FormSpace::full(3, QQ())), InvalidInput);
}

TEST(Osculating, WorkedExampleFlags) {
  Matrix v2 = osculating_basis(ProjPoint::infinity(), 2, 5);
  EXPECT_EQ(rank_of(QQ(), 6, v2), 2);
  Matrix e01{row({1, 0, 0, 0, 0, 0}), row({0, 1, 0, 0, 0, 0})};
  Matrix both = v2;
  both.insert(both.end(), e01.begin(), e01.end());
  EXPECT_EQ(rank_of(QQ(), 6, both), 2);
  Matrix v1 = osculating_basis(ProjPoint::rational(0, 1), 1, 5);
  ASSERT_EQ(v1.size(), 1u);
  EXPECT_EQ(echelon(QQ(), 6, v1).rows(), Matrix{row({0, 0, 0, 0, 0, 1})});
  EXPECT_TRUE(osculating_basis(ProjPoint::rational(1, 1), 0, 5).empty());
  EXPECT_THROW(osculating_basis(ProjPoint::rational(1, 1), 6, 5), InvalidInput);
}

// A form vanishes to order >= i at P exactly when it annihilates V^i(P).
TEST(Osculating, AnnihilatorMatchesVanishingOrder) {
  Gen g(10);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = static_cast<int>(g.integer(2, 6));
    ProjPoint p = g.point();
    const int m = static_cast<int>(g.integer(0, d));
    BinaryForm f = linear_power(p, m) * g.binary_form(QQ(), d - m);
    if (f.is_zero()) continue;
    const int order = testing::naive_orders(FormSpace(d, {f}), p).front();
    for (int i = 0; i <= d; ++i) {
      bool annihilates = true;
      for (const auto& r : osculating_basis(p, i, d)) {
        FieldElement dot(QQ());
        for (int j = 0; j <= d; ++j) dot += f.coeff(j) * r[static_cast<std::size_t>(j)];
        annihilates = annihilates && dot.is_zero();
      }
      EXPECT_EQ(annihilates, order >= i) << f.to_string() << " at " << p.to_string() << " i=" << i;
    }
  }
}

TEST(LambdaPrime, TacnodeWorkedValues) {
  const std::vector<ProjPoint> pts{ProjPoint::infinity(), ProjPoint::rational(0, 1)};
  EXPECT_EQ(lambda_prime(tacnode_center(), pts, {1, 1}), 1);
  EXPECT_EQ(lambda_prime(tacnode_center(), pts, {2, 2}), 2);
  EXPECT_EQ(lambda_prime(tacnode_center(), pts, {1, 0}), 0);
  EXPECT_THROW(lambda_prime(tacnode_center(), {pts[0], pts[0]}, {1, 1}), InvalidInput);
}

TEST(LambdaPrime, MonotoneAndBounded) {
  Gen g(12);
  for (StratumId id : kAllStrata) {
    StratumParams p = g.params(id, 3);
    CenterLine u = center_of(stratum_space(id, p));
    std::vector<ProjPoint> pts{ProjPoint::infinity(), ProjPoint::rational(0, 1), ProjPoint::rational(1, 1)};
    for (int a0 = 0; a0 <= 5; ++a0) {
      for (int a1 = 0; a1 <= 5; ++a1) {
        const int v = lambda_prime(u, {pts[0], pts[1]}, {a0, a1});
        EXPECT_GE(v, 0);
        EXPECT_LE(v, 2);
        if (a0 < 5) {
          EXPECT_LE(v, lambda_prime(u, {pts[0], pts[1]}, {a0 + 1, a1}));
        }
        if (a1 < 5) {
          EXPECT_LE(v, lambda_prime(u, {pts[0], pts[1]}, {a0, a1 + 1}));
        }
      }
    }
    EXPECT_EQ(lambda_prime(u, pts, {0, 0, 0}), 0);
  }
}

TEST(Classify, QuinticIsCuspWithSmoothBranch) {
  Classification c = classify_profile(center_of(testing::quintic()), {ProjPoint::rational(0, 1), ProjPoint::infinity()});
  EXPECT_EQ(c.type, SingularityType::CuspWithSmoothBranch);
  // The cusp branch is read first.
  EXPECT_EQ(c.points.front(), ProjPoint::infinity());
  EXPECT_THROW(classify_profile(center_of(testing::quintic()), {ProjPoint::rational(1, 1)}), Unclassified);
}

TEST(Classify, DeltaInvariants) {
  EXPECT_EQ(delta_invariant(SingularityType::Cusp), 1);
  EXPECT_EQ(delta_invariant(SingularityType::Node), 1);
  for (auto t : {SingularityType::Cusp345, SingularityType::Cusp25, SingularityType::Tacnode,
                 SingularityType::CuspWithSmoothBranch, SingularityType::OrdinaryTriplePoint}) {
    EXPECT_EQ(delta_invariant(t), 2);
    EXPECT_EQ(singularity_type_from_string(to_string(t)), t);
  }
}

// Every family at its designated preimages, with genus and total delta.
TEST(Classify, FamiliesAtDesignatedPreimages) {
  Gen g(14);
  int cases = 0;
  for (StratumId id : kAllStrata) {
    for (int n = 3; n <= 5; ++n) {
      for (int s = 0; s < 5; ++s) {
        StratumParams p = g.params(id, n);
        FormSpace l = stratum_space(id, p);
        ASSERT_EQ(l.dim(), n + 1);
        EXPECT_EQ(genus_of(l), 2) << to_string(id);
        CenterLine u = center_of(l);
        std::vector<SingularityType> types;
        int delta = 0;
        for (const auto& group : designated_preimages(id, p)) {
          Classification c = classify_profile(u, group);
          types.push_back(c.type);
          delta += delta_invariant(c.type);
        }
        EXPECT_EQ(types, stratum_singularities(id)) << to_string(id) << " n=" << n;
        EXPECT_EQ(delta, 2);
        ++cases;
      }
    }
  }
  EXPECT_GE(cases, 120);
}

TEST(SingularLocus, TwoCuspsRamifiesAtCoordinatePoints) {
  StratumParams p;
  p.a = q(1);
  p.b = q(1);
  SingularLocus locus = singular_parameter_locus(stratum_space(StratumId::TwoCusps, p));
  EXPECT_TRUE(locus.ramified_at_infinity);
  EXPECT_EQ(locus.ramification, UniPoly::monomial(q(1), 1));
}

TEST(SingularLocus, RationalNormalCurveIsSmooth) {
  SingularLocus locus = singular_parameter_locus(FormSpace::full(4, QQ()));
  EXPECT_TRUE(locus.ramification.is_constant());
  EXPECT_TRUE(locus.secant.is_constant());
  EXPECT_FALSE(locus.ramified_at_infinity);
  EXPECT_FALSE(locus.secant_at_infinity);
  EXPECT_TRUE(locus.rational_groups.empty());
}

TEST(SingularLocus, QuinticSecantPairsTheCoordinatePoints) {
  SingularLocus locus = singular_parameter_locus(testing::quintic());
  EXPECT_TRUE(locus.secant_at_infinity);
  EXPECT_TRUE(locus.secant.eval(q(0)).is_zero());
  ASSERT_EQ(locus.rational_groups.size(), 1u);
  EXPECT_EQ(locus.rational_groups.front().size(), 2u);
}

TEST(SingularLocus, BasePointsAreRejected) {
  // Two-nodes center with a = 0 meets the rational normal curve.
  const long c = 2, b = 3;
  Row second;
  long cp = 1;
  for (int j = 0; j <= 5; ++j) {
    second.push_back(q(cp + b));
    cp *= c;
  }
  FormSpace l = space_of(CenterLine(5, {row({1, 0, 0, 0, 0, 0}), second}));
  EXPECT_FALSE(basepoint_free(l));
  EXPECT_THROW(singular_parameter_locus(l), PreconditionError);
  EXPECT_THROW(analyze_singularities(l), PreconditionError);
}

TEST(Analyze, EveryFamilyReportsItsSingularities) {
  Gen g(15);
  for (StratumId id : kAllStrata) {
    StratumParams p = g.params(id, 3);
    SingularityReport r = analyze_singularities(stratum_space(id, p));
    EXPECT_EQ(r.genus, 2);
    std::vector<SingularityType> types;
    for (const auto& sp : r.points) {
      if (sp.classification) types.push_back(sp.classification->type);
    }
    auto expected = stratum_singularities(id);
    std::sort(types.begin(), types.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(types, expected) << to_string(id);
    EXPECT_EQ(r.total_delta, 2) << to_string(id);
  }
}

}  // namespace
}  // namespace kfin
