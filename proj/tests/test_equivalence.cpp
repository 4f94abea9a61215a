#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polarmap/differential.hpp"
#include "polarmap/equivalence.hpp"
#include "polarmap/error.hpp"
#include "polarmap/parse.hpp"
#include "polarmap/random.hpp"

namespace {

using namespace polarmap;

TEST(SameRamification, ProportionalAndDistinct) {
  Sampler sampler(1);
  for (int d = 4; d <= 5; ++d) {
    const TernaryForm f = sampler.form(d);
    const Scalar lambda(mpq_class(-7, 3));
    const ProportionalityResult same = same_ramification_test(f, lambda * f);
    EXPECT_EQ(same.verdict, ProportionalityResult::Verdict::ProportionalForms);
    EXPECT_EQ(same.lambda, lambda);
    const ProportionalityResult other = same_ramification_test(f, sampler.form(d));
    EXPECT_EQ(other.verdict, ProportionalityResult::Verdict::Distinct);
    ASSERT_TRUE(other.witness.has_value());
    EXPECT_FALSE(other.witness->is_zero());
  }
}

TEST(SameRamification, Refusals) {
  const TernaryForm cubic = parse_form("x^3+y^3+z^3");
  EXPECT_THROW(same_ramification_test(cubic, cubic), DomainError);
  EXPECT_THROW(same_ramification_test(parse_form("x^4"), parse_form("y^4")), ConeInputError);
  EXPECT_THROW(same_ramification_test(parse_form("x^4+y^4+z^4"), cubic), DegreeMismatch);
}

TEST(Mammana, FermatQuarticHasDiagonalBasis) {
  const TernaryForm f = parse_form("x^4+y^4+z^4");
  const MammanaSolution s = mammana_solve(f);
  ASSERT_EQ(s.dimension(), 3);
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i != j) EXPECT_TRUE(s.basis[k][i][j].is_zero());
      }
    }
    EXPECT_TRUE(is_mammana_matrix(f, s.basis[k]));
    EXPECT_TRUE(polar_net_contains(f, s.partners[k]));
  }
  const TernaryForm g = mammana_partner(f, invertible_member(s));
  EXPECT_TRUE(polar_net_equal(f, g));
  EXPECT_FALSE(polar_net_equal(f, parse_form("x^4+y^4+z^4+x*y*z^2")));
  EXPECT_THROW(polar_net_equal(f, parse_form("x^4")), ConeInputError);
}

TEST(Mammana, PerturbedFermatIsRigid) {
  const MammanaSolution s = mammana_solve(parse_form("x^4+y^4+z^4+x*y*z^2"));
  EXPECT_EQ(s.dimension(), 1);
}

TEST(Mammana, PartnerGradientIsTransformed) {
  const TernaryForm f = parse_form("x^4+y^4+z^4");
  const ScalarMatrix3 a{{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}};
  const TernaryForm g = mammana_partner(f, a);
  EXPECT_EQ(g, parse_form("x^4+2*y^4+3*z^4"));
  const ScalarMatrix3 bad{{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}};
  EXPECT_FALSE(is_mammana_matrix(f, bad));
  EXPECT_THROW(mammana_partner(f, bad), Error);
}

TEST(Type14, MultiplicityAndMammanaDimension) {
  Sampler sampler(3);
  for (int trial = 0; trial < 3; ++trial) {
    for (int d = 3; d <= 5; ++d) {
      const TernaryForm f = type14_generate(random_type14(d, sampler));
      EXPECT_GE(point_multiplicity(f, coordinate_point(0)), d - 1);
      if (d >= 4) EXPECT_GE(mammana_solve(f).dimension(), 2);
    }
  }
  Type14Spec bad;
  bad.alpha = parse_form("x*y^2");
  bad.beta = parse_form("y^3");
  EXPECT_THROW(type14_generate(bad), DomainError);
}

TEST(PointMultiplicity, Examples) {
  EXPECT_EQ(point_multiplicity(parse_form("x^2*y + z^3"), parse_point("1:0:0")), 1);
  EXPECT_EQ(point_multiplicity(parse_form("x*y^2 + z^3"), parse_point("1:0:0")), 2);
  EXPECT_EQ(point_multiplicity(parse_form("y^3 + z^3"), parse_point("1:0:0")), 3);
  EXPECT_EQ(point_multiplicity(parse_form("x^3 + y^3 + z^3"), parse_point("1:0:0")), 0);
}

TEST(SebastianiThom, DiagonalQuartic) {
  Sampler sampler(5);
  for (int trial = 0; trial < 5; ++trial) {
    const Scalar a = sampler.nonzero_coefficient();
    const Scalar b = sampler.nonzero_coefficient();
    const Scalar c = sampler.nonzero_coefficient();
    const TernaryForm f =
        a * parse_form("x^4") + b * parse_form("y^4") + c * parse_form("z^4");
    EXPECT_EQ(hessian_det(f), (Scalar(1728) * a * b * c) * parse_form("x^2*y^2*z^2"));
    const int block[] = {0};
    EXPECT_TRUE(sebastiani_thom_check(f, block));
  }
  const int block[] = {0};
  EXPECT_FALSE(sebastiani_thom_check(parse_form("x^4 + x*y^3 + z^4"), block));
  const int all[] = {0, 1, 2};
  EXPECT_THROW(sebastiani_thom_check(parse_form("x^4"), all), DomainError);
}

TEST(Hesse, HessianOfPencilMember) {
  for (const auto& m : {mpq_class(1), mpq_class(-1, 2), mpq_class(3, 7), mpq_class(-5)}) {
    const HesseParam p = hesse_hessian_param(Scalar(m));
    // Pointwise against the closed form 216[(1+2m^3)xyz - m^2(x^3+y^3+z^3)].
    const oracle::Point x{2, -1, mpq_class(1, 3)};
    const mpq_class expected =
        216 * ((1 + 2 * m * m * m) * x[0] * x[1] * x[2] -
               m * m * (x[0] * x[0] * x[0] + x[1] * x[1] * x[1] + x[2] * x[2] * x[2]));
    EXPECT_EQ(oracle::hessian_at(hesse_member(Scalar(m)), x), expected);
    ASSERT_TRUE(p.mu_prime.has_value());
    EXPECT_EQ(p.mu_prime->rational_value(), mpq_class(-(1 + 2 * m * m * m) / (6 * m * m)));
  }
  const HesseParam zero = hesse_hessian_param(Scalar(0));
  EXPECT_FALSE(zero.mu_prime.has_value());
  EXPECT_EQ(zero.proportionality, Scalar(216));
}

TEST(Hesse, FixedPoint) {
  const HesseParam p = hesse_hessian_param(Scalar(mpq_class(-1, 2)));
  EXPECT_EQ(p.mu_prime, Scalar(mpq_class(-1, 2)));
}

TEST(Hesse, PreimageCubic) {
  const HessePreimageCount z = hesse_preimage_count(Scalar(0));
  EXPECT_EQ(z.with_multiplicity, 3);
  EXPECT_EQ(z.distinct, 3);
  EXPECT_TRUE(z.rational_roots.empty());

  // mu = -1/2: 2m^3 - 3m^2 + 1 = (m - 1)^2 (2m + 1).
  const HessePreimageCount h = hesse_preimage_count(Scalar(mpq_class(-1, 2)));
  EXPECT_EQ(h.with_multiplicity, 3);
  EXPECT_EQ(h.distinct, 2);
  EXPECT_TRUE(h.discriminant.is_zero());
  ASSERT_EQ(h.rational_roots.size(), 2u);
  for (const auto& [m, mult] : h.rational_roots) {
    EXPECT_EQ(hesse_hessian_param(m).mu_prime, Scalar(mpq_class(-1, 2)));
    EXPECT_EQ(mult, m == Scalar(1) ? 2 : 1);
  }
}

}  // namespace
