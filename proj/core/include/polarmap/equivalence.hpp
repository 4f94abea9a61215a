#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "polarmap/differential.hpp"
#include "polarmap/form.hpp"
#include "polarmap/random.hpp"

namespace polarmap {

using ScalarMatrix3 = std::array<std::array<Scalar, 3>, 3>;

struct ProportionalityResult {
  enum class Verdict { ProportionalForms, Distinct };
  Verdict verdict = Verdict::Distinct;
  /// ProportionalForms: g == lambda * f.
  std::optional<Scalar> lambda;
  /// Distinct: the first nonzero gradient minor and its index (0: m01,
  /// 1: m02, 2: m12).
  std::optional<TernaryForm> witness;
  int witness_index = -1;
};

/// Forms of degree d >= 4 with the same ramification: the minors of
/// (grad f; grad g) vanish on H_f, and since 2d - 2 < 3(d - 2) they vanish
/// identically, forcing g = lambda f. Throws DomainError for d <= 3 (the
/// degree argument needs d >= 4), ConeInputError if f is a cone and
/// DegreeMismatch for unequal degrees.
ProportionalityResult same_ramification_test(const TernaryForm& f, const TernaryForm& g);

/// Basis of {A : A * M_f symmetric} together with one partner per basis matrix.
struct MammanaSolution {
  std::vector<ScalarMatrix3> basis;
  std::vector<TernaryForm> partners;  ///< partners[k] belongs to basis[k]

  int dimension() const { return static_cast<int>(basis.size()); }
};

/// Requires d >= 3 and f not a cone.
MammanaSolution mammana_solve(const TernaryForm& f);

/// g = (1/d) sum_i x_i (A grad f)_i. Throws Error unless grad g == A grad f,
/// which holds exactly when A * M_f is symmetric.
TernaryForm mammana_partner(const TernaryForm& f, const ScalarMatrix3& a);

/// A * M_f is symmetric as a matrix of forms.
bool is_mammana_matrix(const TernaryForm& f, const ScalarMatrix3& a);

/// An invertible matrix of the solution space: sum_k (k+1) basis[k] shifted by
/// the first multiple c*I (c = 0, 1, 2, ...) with nonzero determinant. The
/// identity always solves the system, so such a c exists.
ScalarMatrix3 invertible_member(const MammanaSolution& solution);

/// Lambda_g is contained in Lambda_f. Throws ConeInputError if f is a cone and
/// DegreeMismatch for unequal degrees.
bool polar_net_contains(const TernaryForm& f, const TernaryForm& g);

/// Lambda_f == Lambda_g: the six partials span a 3-dimensional space. Throws
/// ConeInputError when either span is smaller and DegreeMismatch for unequal
/// degrees.
bool polar_net_equal(const TernaryForm& f, const TernaryForm& g);

/// Every monomial of f uses only variables from `block` or only from its
/// complement. Throws DomainError unless `block` is a proper nonempty subset
/// of {0, 1, 2}.
bool sebastiani_thom_check(const TernaryForm& f, std::span<const int> block);

/// f = x0 * d alpha/d x1 + beta with alpha = c * x1^d and beta free of x0.
struct Type14Spec {
  int h = 0;  ///< always 0 in three variables
  TernaryForm alpha;
  TernaryForm beta;
};

/// Multiplicity of P on V(f): the order of vanishing of f at P.
int point_multiplicity(const TernaryForm& f, const ProjPoint& point);

/// Throws DomainError for specs violating the invariants (h != 0, alpha not a
/// nonzero multiple of x1^d, beta involving x0 or of another degree) and Error
/// if (1:0:0) ends up with multiplicity below d - 1.
TernaryForm type14_generate(const Type14Spec& spec);

/// alpha = c x1^d with c != 0 and a dense random beta in x1, x2.
Type14Spec random_type14(int degree, Sampler& sampler);

/// f_m = x0^3 + x1^3 + x2^3 + 6 m x0 x1 x2.
TernaryForm hesse_member(const Scalar& m);

struct HesseParam {
  Scalar m;
  TernaryForm hessian;
  /// hess(f_m) = proportionality * f_{mu'}; absent for m = 0, where the
  /// Hessian 216 x0 x1 x2 lies outside the affine chart of the pencil.
  std::optional<Scalar> mu_prime;
  Scalar proportionality;
};

/// Checks hess(f_m) == 216 [(1 + 2m^3) xyz - m^2 (x^3 + y^3 + z^3)] exactly
/// (throwing Error otherwise) and returns mu' = -(1 + 2m^3) / (6 m^2).
HesseParam hesse_hessian_param(const Scalar& m);

struct HessePreimageCount {
  Scalar target;
  /// 2 m^3 + 6 mu m^2 + 1, lowest degree first.
  std::array<Scalar, 4> cubic;
  Scalar discriminant;
  int with_multiplicity = 0;  ///< roots over the algebraic closure
  int distinct = 0;           ///< degree of the squarefree part
  /// Rational roots with their multiplicities.
  std::vector<std::pair<Scalar, int>> rational_roots;
};

/// Members m of the Hesse pencil whose Hessian is f_mu.
HessePreimageCount hesse_preimage_count(const Scalar& mu);

}  // namespace polarmap
