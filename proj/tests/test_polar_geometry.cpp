#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "polarmap/differential.hpp"
#include "polarmap/error.hpp"
#include "polarmap/finite_field.hpp"
#include "polarmap/parse.hpp"
#include "polarmap/polar_geometry.hpp"

namespace {

using namespace polarmap;

TEST(PolarEval, Basics) {
  const TernaryForm f = parse_form("x^3+y^3+z^3");
  EXPECT_EQ(polar_eval(f, parse_point("1:2:3")), parse_point("1:4:9"));
  EXPECT_THROW(polar_eval(parse_form("x^2*y + z^3"), parse_point("0:1:0")), IndeterminateError);
}

TEST(Fiber, FermatCubicOverDiagonal) {
  const CountReport r = fiber_degree(parse_form("x^3+y^3+z^3"), parse_point("1:1:1"));
  EXPECT_EQ(r.with_multiplicity, 4);
  std::vector<ProjPoint> expected;
  for (const char* s : {"1:1:1", "1:1:-1", "1:-1:1", "1:-1:-1"}) {
    expected.push_back(reduce_mod_p(parse_point(s), kDefaultPrime));
  }
  std::vector<ProjPoint> got = r.points;
  auto by_key = [](const ProjPoint& a, const ProjPoint& b) { return point_key(a) < point_key(b); };
  std::sort(got.begin(), got.end(), by_key);
  std::sort(expected.begin(), expected.end(), by_key);
  EXPECT_EQ(got, expected);
}

TEST(Fiber, CoordinatePointHasOnePreimageWithMultiplicity) {
  const CountReport r = fiber_degree(parse_form("x^3+y^3+z^3"), parse_point("1:0:0"));
  EXPECT_EQ(r.with_multiplicity, 4);
  EXPECT_EQ(r.distinct_rational(), 1);
}

TEST(Fiber, SmallPrimeAgreesWithBruteForce) {
  // Over F_13 the fiber equations of a random quartic are enumerated both ways.
  Sampler sampler(21);
  const std::uint64_t p = 13;
  for (int trial = 0; trial < 4; ++trial) {
    const TernaryForm f = sampler.form(4);
    const ProjPoint q = sampler.point();
    CountReport r;
    try {
      r = fiber_degree(f, q, p);
    } catch (const ReductionError&) {
      continue;
    }
    const FiberSystem fs = fiber_system(f, q);
    auto expected = oracle::brute_force_zeros({fs.eqs[0], fs.eqs[1]}, p);
    std::vector<std::array<std::uint64_t, 3>> got;
    for (const auto& x : r.points) got.push_back(point_key(x));
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    if (!r.positive_dimensional) EXPECT_EQ(got, expected);
  }
}

TEST(Fiber, RandomDegrees) {
  Sampler sampler(3);
  for (int d = 3; d <= 4; ++d) {
    const CountReport r = fiber_degree(sampler.form(d), sampler.point());
    EXPECT_EQ(r.with_multiplicity, (d - 1) * (d - 1));
  }
  EXPECT_THROW(fiber_degree(parse_form("x^3"), parse_point("1:0:0")), ConeInputError);
}

TEST(Graph, SystemVanishesOnGraph) {
  Sampler sampler(5);
  const TernaryForm f = sampler.form(3);
  const GraphSystem gs = graph_system(f);
  EXPECT_EQ(gs.equations.size(), 6u);
  EXPECT_EQ(gs.essential().size(), 3u);
  const ProjPoint x = parse_point("1:2:-1");
  const std::array<Scalar, 3> y = gradient(f).at(x);
  for (const auto& e : gs.equations) EXPECT_TRUE(e.form.evaluate(x, y).is_zero());
}

TEST(Graph, SliceCounts) {
  Sampler sampler(7);
  for (int d = 2; d <= 4; ++d) {
    const GraphSliceCounts c = graph_slice_counts(sampler.form(d), sampler);
    EXPECT_EQ(c.n1, 1);
    EXPECT_EQ(c.n12, d - 1);
    EXPECT_EQ(c.n2, (d - 1) * (d - 1));
  }
}

TEST(Branch, Degrees) {
  Sampler sampler(9);
  for (int d = 3; d <= 4; ++d) {
    const CountReport r = branch_degree_count(sampler.form(d), sampler.line());
    EXPECT_EQ(r.with_multiplicity, 3 * (d - 1) * (d - 2));
  }
}

TEST(Steinerian, SliceCounts) {
  Sampler sampler(11);
  const SteinerianCounts c3 = steinerian_slice_counts(sampler.form(3), sampler);
  EXPECT_EQ(c3.c1, 3);
  EXPECT_EQ(c3.c2, 3);
  const SteinerianCounts c4 = steinerian_slice_counts(sampler.form(4), sampler);
  EXPECT_EQ(c4.c1, 6);
  EXPECT_EQ(c4.c2, 12);
}

TEST(Steinerian, SystemVanishesOnKernel) {
  // For the Fermat cubic M_f = diag(6x0, 6x1, 6x2); at x = (1:0:0), y = e1 is
  // in the kernel.
  const auto rows = steinerian_system(parse_form("x^3+y^3+z^3"));
  const ProjPoint x = parse_point("1:0:0");
  const std::array<Scalar, 3> y{Scalar(0), Scalar(1), Scalar(0)};
  for (const auto& r : rows) EXPECT_TRUE(r.evaluate(x, y).is_zero());
}

TEST(Nu, DiagonalFermatPair) {
  const TernaryForm f = parse_form("x^4+y^4+z^4");
  const TernaryForm g = parse_form("x^4+2*y^4+3*z^4");
  EXPECT_EQ(nu_eval(f, g, parse_point("1:1:1")), parse_point("1:2:1"));
  const CountReport r = nu_fiber_bound(f, g, parse_point("0:0:1"));
  ASSERT_TRUE(r.common_component.has_value());
  EXPECT_EQ(r.common_component->degree(), 1);
  EXPECT_LE(r.common_component->degree(), 3);
}

TEST(Nu, RandomFiberBound) {
  Sampler sampler(13);
  const TernaryForm f = sampler.form(4);
  const TernaryForm g = sampler.form(4);
  const CountReport r = nu_fiber_bound(f, g, sampler.point());
  ASSERT_TRUE(r.with_multiplicity.has_value());
  EXPECT_LE(*r.with_multiplicity, 9);
}

TEST(Zfg, SecondEquationVanishesAtLiftedPoints) {
  Sampler sampler(15);
  const TernaryForm f = sampler.form(4);
  const TernaryForm g = sampler.form(4);
  const ZfgSystem z = zfg_build(f, g);
  const ProjPoint x = parse_point("2:-1:3");
  EXPECT_TRUE(z.eq2.evaluate(x, gradient(f).at(x)).is_zero());
  EXPECT_TRUE(z.eq2.evaluate(x, gradient(g).at(x)).is_zero());
}

TEST(Zfg, Verdicts) {
  const TernaryForm fermat = parse_form("x^4+y^4+z^4");
  EXPECT_EQ(zfg_product_test(fermat, Scalar(3) * fermat).verdict, ProductVerdict::Degenerate);
  EXPECT_EQ(zfg_product_test(fermat, parse_form("x^4+2*y^4+3*z^4")).verdict,
            ProductVerdict::PerComponentProduct);
  Sampler sampler(17);
  const ProductTestResult r = zfg_product_test(sampler.form(4), sampler.form(4));
  EXPECT_EQ(r.verdict, ProductVerdict::NotProduct);
  EXPECT_EQ(r.witness.size(), 2u);
}

}  // namespace
