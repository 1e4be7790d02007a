#include <gtest/gtest.h>

#include "kfin/errors.hpp"
#include "kfin/multi_poly.hpp"
#include "kfin/rational_roots.hpp"
#include "kfin/roots_of_unity.hpp"
#include "kfin/uni_poly.hpp"
#include "support.hpp"

namespace kfin {
namespace {

using testing::Gen;
using testing::q;
using testing::QQ;

FieldRef sqrt2() { return NumberField::from_minpoly({-2, 0, 1}); }
FieldRef cyclo5() { return NumberField::from_minpoly({1, 1, 1, 1, 1}); }

// Plain Euclid over the field, the reference for the library gcd.
UniPoly euclid_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly random_poly(Gen& g, FieldRef f, int degree) {
  std::vector<FieldElement> c;
  for (int i = 0; i < degree; ++i) c.push_back(g.element(f));
  c.push_back(g.nonzero_element(f));
  return UniPoly(f, c);
}

// Phi_m as an integer vector, by dividing t^m - 1 by Phi_e for e | m, e < m.
std::vector<Integer> cyclotomic(int m) {
  UniPoly p = UniPoly::monomial(q(1), m) - UniPoly::constant(q(1));
  for (int e = 1; e < m; ++e) {
    if (m % e != 0) continue;
    std::vector<FieldElement> c;
    for (const auto& z : cyclotomic(e)) c.push_back(q(Rational(z)));
    p = exact_div(p, UniPoly(QQ(), c));
  }
  std::vector<Integer> out;
  for (const auto& c : p.rational_coeffs()) out.push_back(c.get_num());
  return out;
}

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(parse_rational(" 6/4 "), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(to_string(parse_rational("-3/6")), "-1/2");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("x"), InvalidInput);
}

TEST(NumberField, InterningGivesPointerIdentity) {
  EXPECT_EQ(sqrt2(), NumberField::from_minpoly({-2, 0, 1}));
  EXPECT_NE(sqrt2(), cyclo5());
  EXPECT_TRUE(NumberField::from_minpoly({5, 1})->is_rational());
}

TEST(NumberField, RejectsReducibleAndNonMonic) {
  EXPECT_THROW(NumberField::from_minpoly({-1, 0, 1}), InvalidInput);
  EXPECT_THROW(NumberField::from_minpoly({1, 0, 2}), InvalidInput);
  // (t^2 + 1)(t^2 + 2)
  EXPECT_THROW(NumberField::from_minpoly({2, 0, 3, 0, 1}), InvalidInput);
}

TEST(NumberField, GeneratorSatisfiesMinpoly) {
  FieldElement th = FieldElement::generator(sqrt2());
  EXPECT_EQ(th * th, FieldElement(sqrt2(), 2));
  FieldElement z = FieldElement::generator(cyclo5());
  EXPECT_TRUE(z.pow(5).is_one());
  EXPECT_FALSE(z.pow(1).is_one());
}

TEST(NumberField, FieldAxiomsOnRandomElements) {
  Gen g(11);
  for (FieldRef f : {QQ(), sqrt2(), cyclo5()}) {
    for (int trial = 0; trial < 40; ++trial) {
      FieldElement x = g.nonzero_element(f), y = g.element(f), z = g.element(f);
      EXPECT_TRUE((x * x.inverse()).is_one());
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x * y) / x, y);
      EXPECT_EQ(x.pow(3), x * x * x);
      EXPECT_EQ(x.pow(-2) * x.pow(2), FieldElement(f, 1));
      FieldElement acc = z;
      acc.sub_mul(x, y);
      EXPECT_EQ(acc, z - x * y);
    }
  }
}

TEST(NumberField, MixedFieldsAreRejected) {
  FieldElement a = FieldElement::generator(sqrt2());
  FieldElement b = FieldElement::generator(cyclo5());
  EXPECT_THROW(a + b, InvalidInput);
  EXPECT_EQ(a + q(1, 2), FieldElement(sqrt2(), std::vector<Rational>{Rational(1, 2), Rational(1)}));
}

TEST(UniPoly, DivmodReconstructsDividend) {
  Gen g(3);
  for (FieldRef f : {QQ(), sqrt2()}) {
    for (int trial = 0; trial < 30; ++trial) {
      UniPoly a = random_poly(g, f, static_cast<int>(g.integer(0, 7)));
      UniPoly b = random_poly(g, f, static_cast<int>(g.integer(0, 4)));
      auto [quo, rem] = divmod(a, b);
      EXPECT_EQ(quo * b + rem, a);
      EXPECT_LT(rem.degree(), b.degree());
    }
  }
}

TEST(UniPoly, GcdMatchesEuclidOnPlantedFactors) {
  Gen g(5);
  for (FieldRef f : {QQ(), sqrt2()}) {
    for (int trial = 0; trial < 40; ++trial) {
      UniPoly common = random_poly(g, f, static_cast<int>(g.integer(0, 3)));
      UniPoly a = common * random_poly(g, f, static_cast<int>(g.integer(0, 5)));
      UniPoly b = common * random_poly(g, f, static_cast<int>(g.integer(0, 5)));
      UniPoly lib = poly_gcd(a, b);
      EXPECT_EQ(lib, euclid_gcd(a, b));
      EXPECT_TRUE(divmod(lib, common.monic()).second.is_zero());
      EXPECT_TRUE(divmod(a, lib).second.is_zero());
    }
  }
}

TEST(UniPoly, GcdOfLargeCoprimePolynomials) {
  // (t+1)^60 - 3^5 t^60 and (t+2)^60 - t^60 share no factor.
  UniPoly t = UniPoly::monomial(q(1), 1);
  UniPoly a = UniPoly::constant(q(1)), b = UniPoly::constant(q(1));
  for (int i = 0; i < 60; ++i) {
    a *= t + UniPoly::constant(q(1));
    b *= t + UniPoly::constant(q(2));
  }
  a -= UniPoly::monomial(q(243), 60);
  b -= UniPoly::monomial(q(1), 60);
  EXPECT_EQ(poly_gcd(a, b).degree(), 0);
  UniPoly shared = t - UniPoly::constant(q(7, 3));
  EXPECT_EQ(poly_gcd(a * shared, b * shared), shared);
}

TEST(UniPoly, XgcdBezoutIdentity) {
  Gen g(8);
  for (int trial = 0; trial < 25; ++trial) {
    UniPoly a = random_poly(g, sqrt2(), 4), b = random_poly(g, sqrt2(), 3);
    XgcdResult r = poly_xgcd(a, b);
    EXPECT_EQ(r.s * a + r.t * b, r.g);
    EXPECT_EQ(r.g, poly_gcd(a, b));
  }
}

TEST(UniPoly, SquarefreePartDropsMultiplicity) {
  UniPoly t = UniPoly::monomial(q(1), 1);
  UniPoly f1 = t - UniPoly::constant(q(2)), f2 = t * t + UniPoly::constant(q(1));
  EXPECT_EQ(squarefree_part(f1 * f1 * f1 * f2 * f2), (f1 * f2).monic());
}

TEST(RationalRoots, PlantedRootsAreRecoveredExactly) {
  Gen g(13);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> planted;
    UniPoly p = random_poly(g, QQ(), static_cast<int>(g.integer(0, 2)));
    // Keep the cofactor free of rational roots by construction: square plus 1.
    p = p * p + UniPoly::constant(q(1));
    for (int i = 0; i < g.integer(0, 4); ++i) {
      Rational r = g.rational(12, 5);
      planted.push_back(r);
      p *= UniPoly::linear_root(q(r));
    }
    std::sort(planted.begin(), planted.end());
    planted.erase(std::unique(planted.begin(), planted.end()), planted.end());
    auto roots = rational_roots_of(p.rational_coeffs());
    std::sort(roots.begin(), roots.end());
    EXPECT_EQ(roots, planted);
  }
}

TEST(RationalRoots, LargeRootsAndZeroRoot) {
  UniPoly p = UniPoly::linear_root(q(Rational(123456789, 1000))) * UniPoly::linear_root(q(0)) *
              UniPoly::linear_root(q(-5, 7));
  auto roots = rational_roots_of(p.rational_coeffs());
  std::sort(roots.begin(), roots.end());
  EXPECT_EQ(roots, (std::vector<Rational>{Rational(-5, 7), Rational(0), Rational(123456789, 1000)}));
}

TEST(RootsInField, RootsInQuadraticField) {
  // t^2 - 2 over Q(sqrt 2) splits; t^2 - 3 does not.
  FieldElement th = FieldElement::generator(sqrt2());
  UniPoly p(sqrt2(), {FieldElement(sqrt2(), -2), FieldElement(sqrt2(), 0), FieldElement(sqrt2(), 1)});
  auto roots = roots_in_field(p);
  ASSERT_EQ(roots.size(), 2u);
  for (const auto& r : roots) EXPECT_TRUE(p.eval(r).is_zero());
  UniPoly shifted = UniPoly::linear_root(th + q(1)) * UniPoly::linear_root(q(3));
  auto r2 = roots_in_field(shifted);
  EXPECT_EQ(r2.size(), 2u);
  UniPoly irreducible(QQ(), {q(-3), q(0), q(1)});
  EXPECT_TRUE(roots_in_field(irreducible).empty());
  EXPECT_EQ(unresolved_part(irreducible), irreducible);
}

TEST(RootsInField, PlantedRootsInLargerFields) {
  Gen g(17);
  for (FieldRef f : {sqrt2(), cyclo5(), NumberField::from_minpoly({-2, 0, 0, 1})}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<FieldElement> planted;
      UniPoly p = UniPoly::constant(g.nonzero_element(f));
      for (int i = 0; i < g.integer(1, 3); ++i) {
        FieldElement r = g.element(f);
        p *= UniPoly::linear_root(r);
        if (std::find(planted.begin(), planted.end(), r) == planted.end()) planted.push_back(r);
      }
      // t^2 + t + 1 has no root in these fields: none contains a primitive cube root of unity.
      p *= UniPoly(f, {FieldElement(f, 1), FieldElement(f, 1), FieldElement(f, 1)});
      auto roots = roots_in_field(p);
      EXPECT_EQ(roots.size(), planted.size());
      for (const auto& r : planted) EXPECT_NE(std::find(roots.begin(), roots.end(), r), roots.end());
      EXPECT_EQ(unresolved_part(p).degree(), 2);
    }
  }
}

TEST(Resultant, SignConventionOnLinearPolynomials) {
  FieldElement r = resultant(UniPoly::linear_root(q(3)), UniPoly::linear_root(q(7)));
  EXPECT_EQ(r, q(-4));
}

TEST(Resultant, ProductFormulaOracle) {
  Gen g(21);
  for (int trial = 0; trial < 30; ++trial) {
    FieldElement lead = q(g.nonzero_rational());
    UniPoly f = UniPoly::constant(lead);
    std::vector<FieldElement> roots;
    for (int i = 0; i < g.integer(1, 4); ++i) {
      roots.push_back(q(g.rational()));
      f *= UniPoly::linear_root(roots.back());
    }
    UniPoly h = random_poly(g, QQ(), static_cast<int>(g.integer(0, 4)));
    FieldElement expected = lead.pow(h.degree());
    for (const auto& r : roots) expected *= h.eval(r);
    EXPECT_EQ(resultant(f, h), expected);
  }
}

TEST(MultiPoly, ArithmeticAndExactDivision) {
  const std::vector<std::string> vars{"x", "y", "z"};
  MultiPoly x = MultiPoly::variable(vars, "x"), y = MultiPoly::variable(vars, "y"),
            z = MultiPoly::variable(vars, "z");
  MultiPoly one = MultiPoly::constant(vars, 1);
  MultiPoly p = (x + y * Rational(2) - one).pow(3);
  MultiPoly r = x * z - y + one;
  EXPECT_EQ(divide_exact(p * r, r), p);
  EXPECT_THROW(divide_exact(p * r + one, r), InternalError);
  EXPECT_EQ(p.eval({Rational(1), Rational(1), Rational(0)}), Rational(8));
  EXPECT_EQ(p.total_degree(), 3);
  EXPECT_EQ(r.to_string(), "x*z - y + 1");
}

TEST(MultiPoly, ResultantCommutesWithSpecialisation) {
  const std::vector<std::string> vars{"a", "b", "t"};
  MultiPoly a = MultiPoly::variable(vars, "a"), b = MultiPoly::variable(vars, "b"),
            t = MultiPoly::variable(vars, "t");
  MultiPoly one = MultiPoly::constant(vars, 1);
  MultiPoly p = t.pow(3) - a * t + b;
  MultiPoly h = (t + one).pow(2) - b * a;
  MultiPoly res = resultant(p, h, "t");
  EXPECT_EQ(res.degree_in(2), 0);
  Gen g(2);
  for (int trial = 0; trial < 15; ++trial) {
    Rational av = g.rational(), bv = g.rational();
    UniPoly ps = p.specialize_to_univariate(2, {av, bv, Rational(0)});
    UniPoly hs = h.specialize_to_univariate(2, {av, bv, Rational(0)});
    EXPECT_EQ(q(res.eval({av, bv, Rational(0)})), resultant(ps, hs));
  }
}

TEST(MultiPoly, NormalizedAndScalarEquality) {
  const std::vector<std::string> vars{"u", "v"};
  MultiPoly u = MultiPoly::variable(vars, "u"), v = MultiPoly::variable(vars, "v");
  MultiPoly p = (u * Rational(3, 2) - v * Rational(9, 4));
  EXPECT_TRUE(equal_up_to_scalar(p, p * Rational(-7)));
  EXPECT_FALSE(equal_up_to_scalar(p, p + u));
  MultiPoly n = p.normalized();
  EXPECT_TRUE(equal_up_to_scalar(n, p));
  EXPECT_EQ(n.leading_coeff(), n.normalized().leading_coeff());
}

TEST(RootsOfUnity, BoundFormula) {
  EXPECT_EQ(root_of_unity_bound(1), 3);
  EXPECT_EQ(root_of_unity_bound(4), 18);
}

TEST(RootsOfUnity, PrimitiveRootsInCyclotomicFields) {
  for (int m = 1; m <= 20; ++m) {
    auto phi = cyclotomic(m);
    FieldRef f = NumberField::from_minpoly(phi);
    // Linear cyclotomic polynomials present Q; the root is then -phi_0.
    FieldElement zeta = f->is_rational() ? q(Rational(-phi[0])) : FieldElement::generator(f);
    auto res = is_root_of_unity(zeta);
    EXPECT_TRUE(res.is_root) << m;
    ASSERT_TRUE(res.order.has_value()) << m;
    EXPECT_EQ(*res.order, m);
    EXPECT_LE(m, root_of_unity_bound(f->degree()));
  }
}

TEST(RootsOfUnity, NonRoots) {
  EXPECT_FALSE(is_root_of_unity(q(2)).is_root);
  EXPECT_FALSE(is_root_of_unity(q(3, 2)).is_root);
  EXPECT_FALSE(is_root_of_unity(FieldElement::generator(cyclo5()) + q(1)).is_root);
  EXPECT_THROW(is_root_of_unity(q(0)), InvalidInput);
}

TEST(RootsOfUnity, ProbeOverQuadratic) {
  // Roots of t^2 + t + 1 are primitive cube roots: zeta = t.
  UniPoly quad(QQ(), {q(1), q(1), q(1)});
  UniPoly t = UniPoly::monomial(q(1), 1);
  EXPECT_FALSE(unit_root_probe(t, quad, 2));
  EXPECT_TRUE(unit_root_probe(t, quad, 3));
  EXPECT_EQ(unit_root_probe_order(t, quad, 10), 3);
  UniPoly quad2(QQ(), {q(-1), q(1), q(1)});
  EXPECT_FALSE(unit_root_probe(t, quad2, 30));
}

}  // namespace
}  // namespace kfin
