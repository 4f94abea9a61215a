#include "polarmap/chow.hpp"

#include "polarmap/error.hpp"

namespace polarmap {

namespace {

void require_degree(int d, int minimum) {
  if (d < minimum) {
    throw DomainError("degree " + std::to_string(d) + " is below the minimum " +
                      std::to_string(minimum));
  }
}

}  // namespace

ChowClass ChowClass::monomial(int i, int j, std::int64_t coefficient) {
  ChowClass out;
  if (i <= 2 && j <= 2) out.c[i][j] = coefficient;
  return out;
}

ChowClass ChowClass::h1() { return monomial(1, 0); }
ChowClass ChowClass::h2() { return monomial(0, 1); }
ChowClass ChowClass::unit() { return monomial(0, 0); }

std::string ChowClass::to_string() const {
  std::string out;
  // Highest total degree first, h1 before h2 within a degree.
  for (int total = 4; total >= 0; --total) {
    for (int i = 2; i >= 0; --i) {
      const int j = total - i;
      if (j < 0 || j > 2 || c[i][j] == 0) continue;
      std::int64_t k = c[i][j];
      if (!out.empty()) {
        out += k < 0 ? " - " : " + ";
        k = k < 0 ? -k : k;
      } else if (k < 0) {
        out += "-";
        k = -k;
      }
      std::string mono;
      if (i > 0) mono += i == 1 ? "h1" : "h1^" + std::to_string(i);
      if (j > 0) mono += (mono.empty() ? "" : "*") + (j == 1 ? std::string("h2") : "h2^" + std::to_string(j));
      if (mono.empty()) {
        out += std::to_string(k);
      } else {
        out += (k == 1 ? "" : std::to_string(k) + "*") + mono;
      }
    }
  }
  return out.empty() ? "0" : out;
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
  ChowClass out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out.c[i][j] = a.c[i][j] + b.c[i][j];
  }
  return out;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) { return a + (-1) * b; }

ChowClass operator*(std::int64_t k, const ChowClass& a) {
  ChowClass out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out.c[i][j] = k * a.c[i][j];
  }
  return out;
}

ChowClass chow_mul(const ChowClass& a, const ChowClass& b) {
  ChowClass out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (a.c[i][j] == 0) continue;
      for (int k = 0; i + k < 3; ++k) {
        for (int l = 0; j + l < 3; ++l) out.c[i + k][j + l] += a.c[i][j] * b.c[k][l];
      }
    }
  }
  return out;
}

ChowClass chow_pow(const ChowClass& a, unsigned exponent) {
  ChowClass out = ChowClass::unit();
  for (unsigned n = 0; n < exponent; ++n) out = chow_mul(out, a);
  return out;
}

std::int64_t intersection_number(const ChowClass& a, const ChowClass& b) {
  return chow_mul(a, b).degree();
}

ChowClass graph_class(int d) {
  require_degree(d, 2);
  const std::int64_t e = d - 1;
  return ChowClass::monomial(2, 0, e * e) + ChowClass::monomial(1, 1, e) +
         ChowClass::monomial(0, 2);
}

ChowClass ramification_class(int d) {
  require_degree(d, 3);
  const ChowClass s = graph_class(d);
  const ChowClass r = chow_mul(-3 * ChowClass::h1(), s) - chow_mul(-3 * ChowClass::h2(), s);
  const std::int64_t e = d - 2;
  const ChowClass expected =
      ChowClass::monomial(1, 2, 3 * e) + ChowClass::monomial(2, 1, 3 * (d - 1) * e);
  if (!(r == expected)) {
    throw Error("adjunction expansion " + r.to_string() + " differs from " + expected.to_string());
  }
  return r;
}

ChowClass steinerian_class(int d) {
  require_degree(d, 3);
  const std::int64_t e = d - 2;
  const ChowClass gamma = chow_pow(e * ChowClass::h1() + ChowClass::h2(), 3);
  const ChowClass expected =
      ChowClass::monomial(2, 1, 3 * e * e) + ChowClass::monomial(1, 2, 3 * e);
  if (!(gamma == expected)) {
    throw Error("cube expansion " + gamma.to_string() + " differs from " + expected.to_string());
  }
  return gamma;
}

PushforwardDegrees pushforward_degrees(int d) {
  const ChowClass r = ramification_class(d);
  return {r(1, 2), r(2, 1)};
}

}  // namespace polarmap
