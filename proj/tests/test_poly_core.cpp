#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "polarmap/elimination.hpp"
#include "polarmap/error.hpp"
#include "polarmap/finite_field.hpp"
#include "polarmap/linalg.hpp"
#include "polarmap/parse.hpp"
#include "polarmap/random.hpp"

namespace {

using namespace polarmap;

TEST(Parse, CanonicalText) {
  EXPECT_EQ(parse_form("z^3 + x^3 + y^3").to_string(), "x0^3 + x1^3 + x2^3");
  EXPECT_EQ(parse_form("3 x y^2 - 1/2*z^3").to_string(), "3*x0*x1^2 - 1/2*x2^3");
  EXPECT_EQ(parse_form("x0*x1*x2 - x1*x2*x0").to_string(), "0");
  EXPECT_EQ(parse_form("x - x").degree(), 1);
}

TEST(Parse, RoundTrip) {
  Sampler sampler(11);
  for (int d = 1; d <= 6; ++d) {
    const TernaryForm f = sampler.form(d);
    EXPECT_EQ(parse_form(f.to_string()), f);
  }
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_form("x^2 + y"), NonHomogeneousError);
  EXPECT_THROW(parse_form("x^2 + * y^2"), ParseError);
  EXPECT_THROW(parse_form("w^2"), ParseError);
  EXPECT_THROW(parse_form("1/0*x"), ParseError);
  try {
    parse_form("x + ?");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parse, Comments) {
  EXPECT_EQ(parse_form(strip_comments("# header\nx^2 # trailing\n+ y^2\n")),
            parse_form("x^2+y^2"));
}

TEST(Form, GrevlexOrder) {
  // x0 > x1 > x2; x0 x2 precedes x1^2 in grevlex.
  EXPECT_EQ(parse_form("z^2 + y^2 + x*z + x^2 + x*y + y*z").to_string(),
            "x0^2 + x0*x1 + x1^2 + x0*x2 + x1*x2 + x2^2");
}

TEST(Form, Arithmetic) {
  const TernaryForm f = parse_form("x + y");
  const TernaryForm g = parse_form("x - y");
  EXPECT_EQ(f * g, parse_form("x^2 - y^2"));
  EXPECT_EQ(f.pow(3), parse_form("x^3 + 3x^2y + 3xy^2 + y^3"));
  EXPECT_THROW(f + parse_form("x^2"), DegreeMismatch);
  EXPECT_EQ(f + TernaryForm(5), f);
}

TEST(Form, EvaluationAgreesWithOracle) {
  Sampler sampler(3);
  for (int d = 2; d <= 5; ++d) {
    const TernaryForm f = sampler.form(d);
    const oracle::Point p{mpq_class(2, 3), mpq_class(-5), mpq_class(7, 2)};
    const std::array<Scalar, 3> q{Scalar(mpq_class(2, 3)), Scalar(-5), Scalar(mpq_class(7, 2))};
    EXPECT_EQ(f.evaluate(q), Scalar(oracle::evaluate(f, p)));
  }
}

TEST(Form, SubstituteLinear) {
  const TernaryForm f = parse_form("x^2 + y*z");
  const std::array<std::array<Scalar, 3>, 3> swap{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
  EXPECT_EQ(f.substitute_linear(swap), parse_form("y^2 + x*z"));
}

TEST(Elimination, DivisionAndGcd) {
  const TernaryForm a = parse_form("x + 2y - z");
  const TernaryForm b = parse_form("x^2 - y*z + 3z^2");
  const TernaryForm c = parse_form("y - 4z");
  const auto q = divides(a, a * b);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, b);
  EXPECT_FALSE(divides(c, a * b).has_value());
  EXPECT_EQ(form_gcd(a * b, a * c), a.monic());
  EXPECT_EQ(form_gcd(b, c), TernaryForm::constant(1));
  EXPECT_EQ(squarefree_part(a * a * c), (a * c).monic());
}

TEST(Elimination, ResultantMatchesEuclideanOracle) {
  Sampler sampler(5);
  for (int da = 1; da <= 4; ++da) {
    for (int db = 1; db <= 4; ++db) {
      const TernaryForm a = sampler.form(da);
      const TernaryForm b = sampler.form(db);
      const Resultant r = resultant_elim(a, b, 2);
      EXPECT_EQ(r.value.degree(), da * db);
      EXPECT_EQ(r.value.degree_in(2), 0);
      for (const auto& [c0, c1] : {std::pair{1, 0}, {1, 3}, {2, -7}, {0, 1}}) {
        const mpq_class expected =
            oracle::resultant(oracle::restrict_x2(a, c0, c1), oracle::restrict_x2(b, c0, c1));
        const std::array<Scalar, 3> at{Scalar(c0), Scalar(c1), Scalar(0)};
        EXPECT_EQ(r.value.evaluate(at), Scalar(expected)) << da << " " << db;
      }
    }
  }
}

TEST(Elimination, BezoutCounts) {
  Sampler sampler(9);
  for (int da = 1; da <= 4; ++da) {
    for (int db = 1; db <= 4; ++db) {
      const IntersectionCount n = bezout_count(sampler.form(da), sampler.form(db));
      ASSERT_TRUE(n.with_multiplicity.has_value());
      EXPECT_EQ(*n.with_multiplicity, da * db);
    }
  }
  // Tangent line: multiplicity 2 at a single point.
  const IntersectionCount tangent = bezout_count(parse_form("y*z - x^2"), parse_form("y"));
  EXPECT_EQ(tangent.with_multiplicity, 2);
  // Shared component.
  const TernaryForm l = parse_form("x - y");
  const IntersectionCount shared = bezout_count(l * parse_form("x + z"), l * parse_form("y"));
  EXPECT_FALSE(shared.with_multiplicity.has_value());
  EXPECT_EQ(shared.common_factor, l.monic());
}

TEST(Linalg, Nullspace) {
  const ScalarMatrix m{{1, 2, 3}, {2, 4, 6}};
  EXPECT_EQ(rank(m, 3), 1u);
  const auto ns = nullspace(m, 3, Field::rationals());
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_EQ(v[0] + 2 * v[1] + 3 * v[2], Scalar(0));
}

std::vector<std::array<std::uint64_t, 3>> keys(const std::vector<ProjPoint>& points) {
  std::vector<std::array<std::uint64_t, 3>> out;
  for (const auto& p : points) out.push_back(point_key(p));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(FiniteField, CommonZerosMatchBruteForce) {
  Sampler sampler(17);
  for (std::uint64_t p : {7u, 11u, 13u}) {
    for (int trial = 0; trial < 6; ++trial) {
      const int da = 1 + trial % 3;
      const int db = 1 + (trial / 3) % 3 + 1;
      const TernaryForm a = sampler.form(da);
      const TernaryForm b = sampler.form(db);
      const std::vector<TernaryForm> forms{reduce_mod_p(a, p), reduce_mod_p(b, p)};
      const ZeroSet z = common_zeros(forms);
      auto expected = oracle::brute_force_zeros({a, b}, p);
      std::sort(expected.begin(), expected.end());
      if (!z.positive_dimensional) EXPECT_EQ(keys(z.points), expected) << "p=" << p;
    }
  }
}

TEST(FiniteField, SharedComponentIsFlagged) {
  const std::uint64_t p = 7;
  const TernaryForm l = parse_form("x + y + z");
  const std::vector<TernaryForm> forms{reduce_mod_p(l * parse_form("x"), p),
                                       reduce_mod_p(l * parse_form("y"), p)};
  const ZeroSet z = common_zeros(forms);
  EXPECT_TRUE(z.positive_dimensional);
  // (0:0:1) lies off the shared line and is still reported.
  EXPECT_NE(std::find(z.points.begin(), z.points.end(), reduce_mod_p(coordinate_point(2), p)),
            z.points.end());
}

TEST(FiniteField, RootsModP) {
  const std::vector<std::uint64_t> c{6, 0, 1};  // t^2 + 6 = t^2 - 1 mod 7
  EXPECT_EQ(roots_mod_p(c, 7), (std::vector<std::uint64_t>{1, 6}));
  EXPECT_THROW(reduce_mod_p(parse_form("1/7*x"), 7), Error);
}

TEST(Random, Deterministic) {
  Sampler a(42);
  Sampler b(42);
  for (int k = 0; k < 5; ++k) EXPECT_EQ(a.form(4), b.form(4));
  EXPECT_EQ(a.point(), b.point());
}

}  // namespace
