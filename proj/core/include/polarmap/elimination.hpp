#pragma once

#include <optional>

#include "polarmap/form.hpp"

namespace polarmap {

struct DivisionResult {
  TernaryForm quotient;
  TernaryForm remainder;
};

/// Division by a single form in descending grevlex order. The remainder is
/// zero exactly when `divisor` divides `dividend`, and the map
/// dividend -> remainder is linear with kernel the multiples of `divisor`.
DivisionResult divide(const TernaryForm& dividend, const TernaryForm& divisor);

/// Quotient q with b = a*q, if it exists. Throws DomainError if a is zero.
std::optional<TernaryForm> divides(const TernaryForm& a, const TernaryForm& b);

/// b / a, throwing Error when the division is not exact.
TernaryForm exact_quotient(const TernaryForm& b, const TernaryForm& a);

/// Scalar content: over Q the signed gcd(numerators)/lcm(denominators) making
/// the primitive part integral with positive leading coefficient; over F_p the
/// leading coefficient. Zero for the zero form.
Scalar content(const TernaryForm& f);
TernaryForm primitive_part(const TernaryForm& f);

/// Sylvester resultant with respect to x_var, computed by fraction-free
/// elimination over the polynomial ring in the other two variables.
struct Resultant {
  int variable = 2;
  TernaryForm value;      ///< the determinant itself, free of x_var
  Scalar content;         ///< scalar content of value (0 when value is 0)
  TernaryForm primitive;  ///< value / content
};

/// Throws DomainError if a or b is zero or if neither involves x_var.
Resultant resultant_elim(const TernaryForm& a, const TernaryForm& b, int var);

/// Monic greatest common divisor. gcd(0, b) = monic(b); a constant result is 1.
TernaryForm form_gcd(const TernaryForm& a, const TernaryForm& b);

/// Product of the distinct irreducible factors of f (monic). Requires
/// characteristic 0 or p > deg f.
TernaryForm squarefree_part(const TernaryForm& f);

/// Intersection count of two plane curves via a resultant in a coordinate
/// chart where the eliminated coordinate point is not a common zero.
struct IntersectionCount {
  /// Sum of intersection multiplicities; absent when a and b share a
  /// component.
  std::optional<int> with_multiplicity;
  /// Monic gcd when a and b share a component, the constant 1 otherwise.
  TernaryForm common_factor;
  /// Elimination variable used (x2 first, then x1, then x0).
  int variable = -1;
  std::optional<Resultant> resultant;
};

/// Throws DegenerateError when all three coordinate points are common zeros
/// and no chart can be used.
IntersectionCount bezout_count(const TernaryForm& a, const TernaryForm& b);

}  // namespace polarmap
