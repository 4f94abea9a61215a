#pragma once

#include <cstdint>
#include <random>

#include "polarmap/form.hpp"

namespace polarmap {

/// Random coefficients are drawn uniformly from [-kCoefficientBound, kCoefficientBound].
inline constexpr long kCoefficientBound = 20;
/// Degenerate random draws are retried this many times before giving up.
inline constexpr int kMaxRedraws = 5;

/// Seeded source of random forms, points and lines. Identical seeds give
/// identical sequences.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  Scalar coefficient();
  Scalar nonzero_coefficient();
  /// Dense form: every monomial of the degree gets a random coefficient.
  TernaryForm form(int degree);
  ProjPoint point();
  /// Coefficients of a random linear form, not all zero.
  std::array<Scalar, 3> line();

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace polarmap
