#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polarmap/form.hpp"

namespace polarmap {

/// Coefficientwise reduction of a rational form to F_p; zero coefficients are
/// dropped. Throws ReductionError naming the offending coefficient when a
/// denominator is divisible by p.
TernaryForm reduce_mod_p(const TernaryForm& f, std::uint64_t p);
ProjPoint reduce_mod_p(const ProjPoint& point, std::uint64_t p);

/// Roots in F_p of sum_k coeffs[k] t^k, ascending. Exhaustive over F_p. An
/// identically zero polynomial yields every element.
std::vector<std::uint64_t> roots_mod_p(std::span<const std::uint64_t> coeffs, std::uint64_t p);

/// Common zeros in P^2(F_p) of a family of forms over F_p.
struct ZeroSet {
  std::vector<ProjPoint> points;       ///< sorted, without repetition
  bool positive_dimensional = false;   ///< the forms share a curve (or are all zero)
};

/// Every point of P^2(F_p) is accounted for: common zeros of a coprime pair
/// are found by projecting from a coordinate point (the resultant's roots on
/// P^1(F_p)) and lifting each root along its line; shared components are
/// split off with a gcd and handled recursively. When the family shares a
/// curve, `points` still lists the isolated zeros away from it that were
/// found, and positive_dimensional is set.
ZeroSet common_zeros(std::span<const TernaryForm> forms);

/// Points of V(f) on the line through a and b, over F_p. Throws
/// DegenerateError if f vanishes on the whole line.
std::vector<ProjPoint> points_on_line(const TernaryForm& f, const ProjPoint& a,
                                      const ProjPoint& b);

/// Points of V(f) over F_p on `lines` pseudo-random lines drawn from `seed`,
/// sorted and without repetition. Lines contained in V(f) are skipped.
std::vector<ProjPoint> sample_curve_points(const TernaryForm& f, int lines, std::uint64_t seed);

/// Sorting key for points over F_p.
std::array<std::uint64_t, 3> point_key(const ProjPoint& point);

}  // namespace polarmap
