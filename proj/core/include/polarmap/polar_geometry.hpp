#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarmap/differential.hpp"
#include "polarmap/form.hpp"
#include "polarmap/random.hpp"

namespace polarmap {

inline constexpr std::uint64_t kDefaultPrime = 10007;

/// A form on P^2 x P^2 that is linear in y: sum_i coeff[i](x) * y_i.
struct YLinearForm {
  std::array<TernaryForm, 3> coeff;

  int x_degree() const;
  /// The form in x obtained by fixing y.
  TernaryForm at_y(const std::array<Scalar, 3>& y) const;
  /// The linear form in y obtained by fixing x.
  std::array<Scalar, 3> at_x(const ProjPoint& x) const;
  Scalar evaluate(const ProjPoint& x, const std::array<Scalar, 3>& y) const;
  bool is_zero() const;
  /// "(x0^2)*y0 + (-x1)*y2"; zero coefficients are omitted.
  std::string to_string() const;
};

/// Two independent equations of degree d-1 cutting out the fiber of the polar
/// map over Q.
struct FiberSystem {
  ProjPoint target;
  int pivot = 0;  ///< first nonzero coordinate of Q
  std::array<TernaryForm, 2> eqs;
};

/// Equations y_i d_j f - y_j d_i f of the graph S_f, for all ordered pairs
/// i != j; the pairs with i < j are the essential ones, the others repeat them
/// up to sign.
struct GraphSystem {
  struct Equation {
    int i;
    int j;
    YLinearForm form;
  };
  std::vector<Equation> equations;

  std::vector<YLinearForm> essential() const;
};

/// Z_{f,g}: hess_f = 0 together with det(y; grad f; grad g) = 0.
struct ZfgSystem {
  TernaryForm eq1;
  /// Laplace expansion along y: (m12, -m02, m01).
  YLinearForm eq2;
  MinorTriple minors;
  /// eq2 vanishes identically (proportional gradients).
  bool degenerate = false;
};

enum class CountKind { Fiber, GraphSlice, Branch, Steinerian, NuFiber };
std::string to_string(CountKind kind);

/// A count verified two ways: by the degree of an elimination resultant (with
/// multiplicity) and by enumeration of common zeros over F_p.
struct CountReport {
  CountKind kind = CountKind::Fiber;
  /// Absent when the two curves share a component.
  std::optional<int> with_multiplicity;
  /// Reduced common component when one exists.
  std::optional<TernaryForm> common_component;
  int variable = -1;                  ///< elimination variable used
  std::uint64_t prime = 0;
  std::vector<ProjPoint> points;      ///< distinct common zeros over F_p
  bool positive_dimensional = false;  ///< the reductions share a curve over F_p

  int distinct_rational() const { return static_cast<int>(points.size()); }
};

/// Throws IndeterminateError at singular points of V(f).
ProjPoint polar_eval(const TernaryForm& f, const ProjPoint& point);

/// Throws ConeInputError for cones.
FiberSystem fiber_system(const TernaryForm& f, const ProjPoint& target);

/// Degree of the fiber of the polar map over Q. Throws ConeInputError for
/// cones and DegenerateError when no elimination chart is usable.
CountReport fiber_degree(const TernaryForm& f, const ProjPoint& target,
                         std::uint64_t prime = kDefaultPrime);

/// Intersections of H_f with the pullback ell(grad f) of a line. Requires
/// hess_f != 0 (ConeInputError otherwise).
CountReport branch_degree_count(const TernaryForm& f, const std::array<Scalar, 3>& ell,
                                std::uint64_t prime = kDefaultPrime);

GraphSystem graph_system(const TernaryForm& f);

struct GraphSliceCounts {
  int n1 = 0;   ///< S_f . h1^2
  int n12 = 0;  ///< S_f . h1 h2
  int n2 = 0;   ///< S_f . h2^2
};

/// Slices of the graph by random linear conditions drawn from `sampler`.
/// Degenerate draws are retried up to kMaxRedraws times before DegenerateError.
GraphSliceCounts graph_slice_counts(const TernaryForm& f, Sampler& sampler);

/// Rows of M_f * y, of bidegree (d-2, 1). Requires d >= 3.
std::array<YLinearForm, 3> steinerian_system(const TernaryForm& f);

struct SteinerianCounts {
  int c1 = 0;  ///< Gamma_f . h1
  int c2 = 0;  ///< Gamma_f . h2
};

/// c1 counts roots of hess_f on a random line. c2 counts points x where
/// M_f(x) y = 0 has a solution on a random line l2 = span(Y1, Y2): with
/// N = M_f [Y1 | Y2], the 2x2 minors D01, D02 of N vanish there and on the
/// extraneous locus N00 = N01 = 0, which is divided out of Res(D01, D02).
/// Throws DegenerateError when every draw fails, which happens when the rank of
/// M_f drops identically on a component of H_f.
SteinerianCounts steinerian_slice_counts(const TernaryForm& f, Sampler& sampler);

/// nu_{f,g}(P) = (m01(P) : m02(P) : m12(P)). Throws DomainError when the minors
/// are linearly dependent and IndeterminateError at base points.
ProjPoint nu_eval(const TernaryForm& f, const TernaryForm& g, const ProjPoint& point);

/// Fiber of nu_{f,g} over Q = (q0 : q1 : q2): the points where grad f and
/// grad g both lie on the line q2*y0 - q1*y1 + q0*y2 = 0. A shared component is
/// reported reduced, and its degree is bounded by d - 1.
CountReport nu_fiber_bound(const TernaryForm& f, const TernaryForm& g, const ProjPoint& target,
                           std::uint64_t prime = kDefaultPrime);

/// Throws DegreeMismatch for forms of different degree.
ZfgSystem zfg_build(const TernaryForm& f, const TernaryForm& g);

enum class ProductVerdict { Product, PerComponentProduct, NotProduct, Degenerate };
std::string to_string(ProductVerdict verdict);

struct ProductTestResult {
  ProductVerdict verdict = ProductVerdict::Degenerate;
  /// Product: the fixed line (v12 : -v02 : v01) through grad f(P) and grad g(P).
  std::optional<ProjPoint> line;
  /// Product: the constant minor vector v along H_f.
  std::optional<ProjPoint> minor_vector;
  /// PerComponentProduct: distinct minor vectors seen on H_f over F_p (may
  /// miss components without F_p points).
  std::vector<ProjPoint> component_images;
  /// NotProduct: two points of H_f over F_p with non-proportional minors, when
  /// sampling finds them.
  std::vector<ProjPoint> witness;
  /// Zeros of the minor vector on H_f over F_p (support of vertical components).
  std::vector<ProjPoint> vertical_points;
  TernaryForm hessian_reduced;
  std::uint64_t prime = 0;
  std::string note;
};

/// Decides whether the minor vector v of (f, g) is projectively constant
/// along H_f, exactly over Q. With h the squarefree part of hess_f and N_i the
/// remainders of the minors modulo h, a product means v_j N_i = v_i N_j for a
/// nonzero scalar v. Failing that, constancy on each component separately is
/// tested by differentiating along the tangent field x cross grad h. Points of
/// H_f over F_p only supply witnesses and the per-component images.
ProductTestResult zfg_product_test(const TernaryForm& f, const TernaryForm& g,
                                   std::uint64_t prime = kDefaultPrime, std::uint64_t seed = 1);

}  // namespace polarmap
