#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polarmap/differential.hpp"
#include "polarmap/error.hpp"
#include "polarmap/parse.hpp"
#include "polarmap/random.hpp"

namespace {

using namespace polarmap;

TEST(Gradient, Euler) {
  Sampler sampler(1);
  for (int d = 1; d <= 6; ++d) {
    const TernaryForm f = sampler.form(d);
    EXPECT_TRUE(euler_check(f));
    EXPECT_TRUE(gradient(f).satisfies_euler());
  }
}

TEST(Gradient, CorruptedTermMapFailsEuler) {
  TernaryForm::Terms terms{{{2, 0, 0}, Scalar(1)}, {{0, 1, 0}, Scalar(1)}};
  const TernaryForm bad = TernaryForm::from_terms_unchecked(terms, 2, Field::rationals());
  EXPECT_FALSE(euler_check(bad));
}

TEST(Hessian, FermatCubic) {
  EXPECT_EQ(hessian_det(parse_form("x^3+y^3+z^3")).to_string(), "216*x0*x1*x2");
}

TEST(Hessian, AgreesWithPointwiseOracle) {
  Sampler sampler(2);
  const std::vector<oracle::Point> points{{1, 2, 3}, {mpq_class(1, 2), -1, 4}, {0, 5, -3}};
  for (int d = 2; d <= 6; ++d) {
    const TernaryForm f = sampler.form(d);
    const TernaryForm h = hessian_det(f);
    EXPECT_EQ(h.degree(), 3 * (d - 2));
    for (const auto& p : points) {
      const std::array<Scalar, 3> s{Scalar(p[0]), Scalar(p[1]), Scalar(p[2])};
      EXPECT_EQ(h.evaluate(s), Scalar(oracle::hessian_at(f, p)));
    }
  }
}

TEST(Hessian, CovariantUnderLinearChange) {
  // hess(f o A) = det(A)^2 * (hess f) o A.
  Sampler sampler(4);
  const std::array<std::array<Scalar, 3>, 3> a{{{1, 2, 0}, {-1, 1, 3}, {2, 0, 1}}};
  std::array<std::array<mpq_class, 3>, 3> aq;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) aq[i][j] = a[i][j].rational_value();
  }
  const Scalar det(oracle::det3(aq));
  for (int d = 3; d <= 5; ++d) {
    const TernaryForm f = sampler.form(d);
    EXPECT_EQ(hessian_det(f.substitute_linear(a)),
              (det * det) * hessian_det(f).substitute_linear(a));
  }
}

TEST(Hessian, Cones) {
  for (int d = 3; d <= 6; ++d) {
    const TernaryForm f = parse_form("x").pow(d);
    EXPECT_TRUE(hessian_det(f).is_zero());
    EXPECT_EQ(hessian_det(f).degree(), 3 * (d - 2));
  }
  EXPECT_TRUE(is_cone(parse_form("x^2*y + x*y^2")));
  EXPECT_TRUE(is_cone(parse_form("x^2*y - 2*x*y^2")));
  EXPECT_FALSE(is_cone(parse_form("x^3 + y^3 + z^3")));
  EXPECT_THROW(hessian_matrix(parse_form("x")), DomainError);
}

TEST(Minors, AnnihilatedByRows) {
  Sampler sampler(6);
  const TernaryForm f = sampler.form(4);
  const TernaryForm g = sampler.form(4);
  const MinorTriple m = gradient_minors(f, g);
  EXPECT_TRUE(m.annihilated_by(gradient(f)));
  EXPECT_TRUE(m.annihilated_by(gradient(g)));
  EXPECT_FALSE(find_linear_relation(m).coefficients.has_value());
  EXPECT_THROW(gradient_minors(f, sampler.form(3)), DegreeMismatch);
}

TEST(Minors, ProportionalGradientsAreDegenerate) {
  const TernaryForm f = parse_form("x^4 + y^4 + z^4 + x*y*z^2");
  const LinearRelation r = find_linear_relation(gradient_minors(f, Scalar(5) * f));
  EXPECT_TRUE(r.degenerate);
}

TEST(Minors, RelationGivesSyzygyOfKoszulType) {
  // grad(f + l^d) - grad f is a multiple of the coefficient vector of l, so
  // the minors satisfy a linear relation.
  const TernaryForm f = parse_form("x^4 + y^4 + z^4");
  const TernaryForm g = f + parse_form("x + 2*y - z").pow(4);
  const MinorTriple m = gradient_minors(f, g);
  const LinearRelation r = find_linear_relation(m);
  ASSERT_TRUE(r.coefficients.has_value());
  const SyzygyVector s = syzygy_from_relation(f, g, *r.coefficients);
  EXPECT_TRUE(is_jacobian_syzygy(f, s));
  const auto b = syzygy_to_koszul(f, s);
  ASSERT_TRUE(b.has_value());
  const SyzygyVector back = koszul_combination(f, *b);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(back.h[i], s.h[i]);
}

TEST(Koszul, RoundTrip) {
  Sampler sampler(8);
  const TernaryForm f = sampler.form(4);
  const std::array<Scalar, 3> b{Scalar(3), Scalar(-2), Scalar(mpq_class(1, 5))};
  const SyzygyVector s = koszul_combination(f, b);
  EXPECT_TRUE(is_jacobian_syzygy(f, s));
  EXPECT_EQ(syzygy_to_koszul(f, s), b);
}

TEST(Proportionality, Factor) {
  const TernaryForm f = parse_form("x^2 + y*z");
  EXPECT_EQ(proportionality_factor(f, Scalar(mpq_class(-3, 4)) * f), Scalar(mpq_class(-3, 4)));
  EXPECT_FALSE(proportionality_factor(f, parse_form("x^2 - y*z")).has_value());
}

TEST(Smoothness, Probable) {
  Sampler sampler(10);
  EXPECT_TRUE(probable_smoothness(sampler.form(4)).probably_smooth);
  const SmoothnessReport cusp = probable_smoothness(parse_form("x^2*y + z^3"));
  EXPECT_FALSE(cusp.probably_smooth);
  ASSERT_TRUE(cusp.witness.has_value());
}

}  // namespace
