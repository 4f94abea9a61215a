#include <gtest/gtest.h>

#include "polarmap/chow.hpp"
#include "polarmap/error.hpp"

namespace {

using namespace polarmap;

TEST(Chow, Truncation) {
  EXPECT_EQ(chow_pow(ChowClass::h1(), 3), ChowClass{});
  EXPECT_EQ(chow_mul(ChowClass::h1(), ChowClass::h2()), ChowClass::monomial(1, 1));
  EXPECT_EQ(intersection_number(ChowClass::monomial(2, 1), ChowClass::h2()), 1);
  EXPECT_EQ(ChowClass::monomial(1, 2, 4).to_string(), "4*h1*h2^2");
  EXPECT_EQ(ChowClass{}.to_string(), "0");
}

TEST(Chow, BinomialExpansion) {
  // (a h1 + h2)^3 = 3a^2 h1^2 h2 + 3a h1 h2^2 once h1^3 = h2^3 = 0.
  for (std::int64_t a = 0; a <= 5; ++a) {
    const ChowClass c = chow_pow(a * ChowClass::h1() + ChowClass::h2(), 3);
    EXPECT_EQ(c(2, 1), 3 * a * a);
    EXPECT_EQ(c(1, 2), 3 * a);
    EXPECT_EQ(c(0, 0) + c(1, 0) + c(0, 1) + c(2, 0) + c(1, 1) + c(0, 2) + c(2, 2), 0);
  }
}

TEST(Chow, GraphClass) {
  // The graph meets h1^2 (a point in the source) once, h2^2 in (d-1)^2 points.
  for (int d = 2; d <= 8; ++d) {
    const ChowClass s = graph_class(d);
    EXPECT_EQ(intersection_number(s, ChowClass::monomial(2, 0)), 1);
    EXPECT_EQ(intersection_number(s, ChowClass::monomial(1, 1)), d - 1);
    EXPECT_EQ(intersection_number(s, ChowClass::monomial(0, 2)), (d - 1) * (d - 1));
  }
  EXPECT_THROW(graph_class(1), DomainError);
}

TEST(Chow, RamificationAndPushforwards) {
  for (int d = 3; d <= 10; ++d) {
    const ChowClass r = ramification_class(d);
    EXPECT_EQ(r(1, 2), 3 * (d - 2));
    EXPECT_EQ(r(2, 1), 3 * (d - 1) * (d - 2));
    const PushforwardDegrees p = pushforward_degrees(d);
    EXPECT_EQ(p.hessian_degree, 3 * (d - 2));
    EXPECT_EQ(p.branch_degree, 3 * (d - 1) * (d - 2));
  }
  EXPECT_THROW(ramification_class(2), DomainError);
}

TEST(Chow, Steinerian) {
  for (int d = 3; d <= 10; ++d) {
    const ChowClass g = steinerian_class(d);
    EXPECT_EQ(g(2, 1), 3 * (d - 2) * (d - 2));
    EXPECT_EQ(g(1, 2), 3 * (d - 2));
  }
}

}  // namespace
