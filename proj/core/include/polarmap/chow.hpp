#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace polarmap {

/// An element of Z[h1, h2]/(h1^3, h2^3), the Chow ring of P^2 x P^2, stored
/// densely: c[i][j] is the coefficient of h1^i h2^j.
struct ChowClass {
  std::array<std::array<std::int64_t, 3>, 3> c{};

  static ChowClass h1();
  static ChowClass h2();
  static ChowClass unit();
  static ChowClass monomial(int i, int j, std::int64_t coefficient = 1);

  std::int64_t operator()(int i, int j) const { return c[i][j]; }
  /// Coefficient of h1^2 h2^2, i.e. the degree map.
  std::int64_t degree() const { return c[2][2]; }
  /// "9*h1^2 + 3*h1*h2 + h2^2"; "0" for the zero class.
  std::string to_string() const;

  friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(std::int64_t k, const ChowClass& a);
  friend bool operator==(const ChowClass& a, const ChowClass& b) = default;
};

/// Product with h1^3 = h2^3 = 0.
ChowClass chow_mul(const ChowClass& a, const ChowClass& b);
ChowClass chow_pow(const ChowClass& a, unsigned exponent);

/// deg(a * b).
std::int64_t intersection_number(const ChowClass& a, const ChowClass& b);

/// [S_f] = (d-1)^2 h1^2 + (d-1) h1 h2 + h2^2. Requires d >= 2.
ChowClass graph_class(int d);

/// R_f = (K_{P^2 x P^2} restricted) - rho^* K_{P^2}, expanded as
/// (-3 h1) [S_f] - (-3 h2) [S_f]. Throws Error if the expansion differs from
/// 3(d-2) h1 h2^2 + 3(d-1)(d-2) h1^2 h2. Requires d >= 3.
ChowClass ramification_class(int d);

/// ((d-2) h1 + h2)^3, checked against 3(d-2)^2 h1^2 h2 + 3(d-2) h1 h2^2.
/// Requires d >= 3.
ChowClass steinerian_class(int d);

struct PushforwardDegrees {
  std::int64_t hessian_degree;  ///< p1_* R_f = deg H_f
  std::int64_t branch_degree;   ///< p2_* R_f = deg B_f
};

/// Requires d >= 3.
PushforwardDegrees pushforward_degrees(int d);

}  // namespace polarmap
