#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "polarmap/scalar.hpp"

namespace polarmap {

/// Exponent triple (e0, e1, e2) of the monomial x0^e0 x1^e1 x2^e2.
using Exponents = std::array<int, 3>;

inline int total_degree(const Exponents& e) { return e[0] + e[1] + e[2]; }

/// Graded reverse lexicographic order with x0 > x1 > x2, as a "greater than"
/// predicate so ordered containers iterate from the leading term down.
struct GrevlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    if (a[2] != b[2]) return a[2] < b[2];
    return a[1] < b[1];
  }
};

/// All exponent triples of total degree d, in canonical (descending) order.
std::vector<Exponents> monomials_of_degree(int degree);

class ProjPoint;

/// A homogeneous polynomial in x0, x1, x2 over Q or F_p, stored sparsely.
///
/// Every stored coefficient is nonzero and every stored exponent triple sums
/// to degree(). The zero form keeps its degree tag. Addition of a zero form of
/// any degree acts as the identity, so zero entries of weighted matrices need
/// no special casing; adding two nonzero forms of different degree throws
/// DegreeMismatch.
class TernaryForm {
 public:
  using Terms = std::map<Exponents, Scalar, GrevlexDescending>;

  /// The zero form of the given degree.
  explicit TernaryForm(int degree = 0, Field field = Field::rationals());

  /// Validates homogeneity (throws NonHomogeneousError) and drops zero terms.
  static TernaryForm from_terms(Terms terms, Field field = Field::rationals());
  static TernaryForm from_terms(Terms terms, int degree, Field field);
  /// Skips the homogeneity check. Exists only so tests can build corrupted
  /// term maps as negative controls.
  static TernaryForm from_terms_unchecked(Terms terms, int degree, Field field);

  static TernaryForm monomial(const Exponents& e, const Scalar& coefficient);
  static TernaryForm variable(int index, Field field = Field::rationals());
  static TernaryForm constant(const Scalar& value);
  /// c0*x0 + c1*x1 + c2*x2.
  static TernaryForm linear(const std::array<Scalar, 3>& coefficients);

  int degree() const { return degree_; }
  Field field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Scalar coefficient(const Exponents& e) const;
  const Exponents& leading_monomial() const;
  const Scalar& leading_coefficient() const;
  /// Largest exponent of x_var over all terms; -1 for the zero form.
  int degree_in(int var) const;
  bool is_homogeneous() const;

  Scalar evaluate(std::span<const Scalar, 3> point) const;
  Scalar evaluate(const ProjPoint& point) const;

  TernaryForm derivative(int var) const;
  TernaryForm scaled(const Scalar& factor) const;
  TernaryForm pow(unsigned exponent) const;
  /// The same form divided by its leading coefficient.
  TernaryForm monic() const;

  /// f(A x), i.e. x_i -> sum_j A[i][j] x_j.
  TernaryForm substitute_linear(const std::array<std::array<Scalar, 3>, 3>& matrix) const;
  /// f(images[0], images[1], images[2]); the images must share a degree.
  TernaryForm substitute(const std::array<TernaryForm, 3>& images) const;

  /// Coefficient of x_var^k, a form of degree d - k free of x_var.
  TernaryForm coefficient_in(int var, int k) const;

  /// Canonical text: x0,x1,x2 names, descending grevlex, explicit '*'.
  std::string to_string() const;

  TernaryForm operator-() const;
  friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator-(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator*(const Scalar& s, const TernaryForm& f) { return f.scaled(s); }
  /// Forms are equal when their fields and term maps agree; zero forms of
  /// different degree tags compare equal only if the tags agree too.
  friend bool operator==(const TernaryForm& a, const TernaryForm& b);

 private:
  TernaryForm(Terms terms, int degree, Field field);

  Terms terms_;
  int degree_;
  Field field_;
};

/// A point of P^2 normalized so that its first nonzero coordinate is 1.
class ProjPoint {
 public:
  /// Throws DomainError if all coordinates vanish.
  ProjPoint(const Scalar& c0, const Scalar& c1, const Scalar& c2);
  explicit ProjPoint(const std::array<Scalar, 3>& coords);

  const Scalar& operator[](int i) const { return coords_[i]; }
  const std::array<Scalar, 3>& coords() const { return coords_; }
  Field field() const { return coords_[0].field(); }
  /// Index of the first nonzero coordinate.
  int pivot() const;

  std::string to_string() const;
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) = default;

 private:
  std::array<Scalar, 3> coords_;
};

/// Parses "a:b:c" or "a,b,c" with integer or p/q entries.
ProjPoint parse_point(const std::string& text);

/// Standard coordinate point e_i.
ProjPoint coordinate_point(int index, Field field = Field::rationals());

}  // namespace polarmap
