#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "polarmap/form.hpp"
#include "polarmap/matrix.hpp"

namespace polarmap {

/// The partial derivatives (d0 f, d1 f, d2 f) of a form of degree d >= 1,
/// kept together with f itself.
struct GradientTriple {
  std::array<TernaryForm, 3> parts;
  TernaryForm source;

  const TernaryForm& operator[](int i) const { return parts[i]; }
  /// x0*d0f + x1*d1f + x2*d2f == d*f.
  bool satisfies_euler() const;
  /// w0*d0f + w1*d1f + w2*d2f.
  TernaryForm weighted(const std::array<Scalar, 3>& weights) const;
  std::array<Scalar, 3> at(const ProjPoint& point) const;
};

/// Throws DomainError for degree 0.
GradientTriple gradient(const TernaryForm& f);

/// Euler's identity sum x_i d_i f == d f, tested exactly on the stored terms.
bool euler_check(const TernaryForm& f);

/// Symmetric 3x3 matrix of second partials. Requires d >= 2.
FormMatrix hessian_matrix(const TernaryForm& f);

/// det M_f: zero or a form of degree 3(d - 2).
TernaryForm hessian_det(const TernaryForm& f);

/// Hesse: f defines concurrent lines iff its Hessian vanishes identically.
bool is_cone(const TernaryForm& f);

/// Order-2 minors of the 2x3 matrix with rows grad f and grad g.
struct MinorTriple {
  TernaryForm m01;  ///< d0f d1g - d1f d0g
  TernaryForm m02;  ///< d0f d2g - d2f d0g
  TernaryForm m12;  ///< d1f d2g - d2f d1g

  std::array<TernaryForm, 3> as_array() const { return {m01, m02, m12}; }
  bool all_zero() const { return m01.is_zero() && m02.is_zero() && m12.is_zero(); }
  std::array<Scalar, 3> at(const ProjPoint& point) const;
  /// Each row r of the 2x3 matrix satisfies r0*m12 - r1*m02 + r2*m01 == 0.
  bool annihilated_by(const GradientTriple& row) const;
};

/// Throws DegreeMismatch unless deg f == deg g >= 2.
MinorTriple gradient_minors(const TernaryForm& f, const TernaryForm& g);

struct LinearRelation {
  /// Nonzero (a0, a1, a2), first nonzero entry 1, with sum a_i * minor_i == 0;
  /// absent when the minors are linearly independent.
  std::optional<std::array<Scalar, 3>> coefficients;
  /// All three minors vanish identically (proportional gradients); the
  /// reported coefficients are then just (1, 0, 0).
  bool degenerate = false;
};

/// Kernel of the monomial-coefficient matrix of the three minors, by exact
/// Gaussian elimination.
LinearRelation find_linear_relation(const MinorTriple& minors);

/// h0*d0f + h1*d1f + h2*d2f == 0 with all h_i of a common degree.
struct SyzygyVector {
  std::array<TernaryForm, 3> h;
};

bool is_jacobian_syzygy(const TernaryForm& f, const SyzygyVector& s);

/// The Jacobian syzygy of f induced by a linear relation a among the minors
/// of (grad f; grad g):
///   (a0 d1g + a1 d2g, -(a0 d0g - a2 d2g), -(a1 d0g + a2 d1g)).
SyzygyVector syzygy_from_relation(const TernaryForm& f, const TernaryForm& g,
                                  const std::array<Scalar, 3>& a);

/// b0 K01 + b1 K02 + b2 K12 for the Koszul relations
///   K01 = (-d1f, d0f, 0),  K02 = (-d2f, 0, d0f),  K12 = (0, -d2f, d1f).
SyzygyVector koszul_combination(const TernaryForm& f, const std::array<Scalar, 3>& b);

/// Writes a syzygy whose entries have degree d - 1 as a scalar combination of
/// the Koszul relations, or nullopt if none exists (a non-Koszul syzygy,
/// impossible for smooth f). Throws DegreeMismatch when the entries are not
/// of degree d - 1 and DomainError when s is not a syzygy of f.
std::optional<std::array<Scalar, 3>> syzygy_to_koszul(const TernaryForm& f, const SyzygyVector& s);

/// lambda with g == lambda * f, if it exists and f is nonzero.
std::optional<Scalar> proportionality_factor(const TernaryForm& f, const TernaryForm& g);

inline constexpr std::array<std::uint64_t, 3> kDefaultSmoothnessPrimes{10007, 10009, 10037};

struct SmoothnessReport {
  /// No prime exhibited a common zero of the partials.
  bool probably_smooth = true;
  std::vector<std::uint64_t> primes_checked;
  /// Primes skipped because a coefficient has a denominator divisible by them.
  std::vector<std::uint64_t> primes_skipped;
  std::optional<ProjPoint> witness;   ///< common zero of the partials mod witness_prime
  std::uint64_t witness_prime = 0;
};

/// Probabilistic smoothness test: the partials of f are reduced modulo each
/// prime and their common zeros in P^2(F_p) are enumerated.
SmoothnessReport probable_smoothness(const TernaryForm& f,
                                     std::span<const std::uint64_t> primes = kDefaultSmoothnessPrimes);

}  // namespace polarmap
