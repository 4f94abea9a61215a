#include "polarmap/random.hpp"

namespace polarmap {

long Sampler::integer(long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(rng_);
}

Scalar Sampler::coefficient() { return Scalar(integer(-kCoefficientBound, kCoefficientBound)); }

Scalar Sampler::nonzero_coefficient() {
  long v = 0;
  while (v == 0) v = integer(-kCoefficientBound, kCoefficientBound);
  return Scalar(v);
}

TernaryForm Sampler::form(int degree) {
  TernaryForm::Terms terms;
  for (const auto& e : monomials_of_degree(degree)) terms.emplace(e, coefficient());
  return TernaryForm::from_terms(std::move(terms), degree, Field::rationals());
}

ProjPoint Sampler::point() {
  while (true) {
    std::array<Scalar, 3> c{coefficient(), coefficient(), coefficient()};
    if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero())) return ProjPoint(c);
  }
}

std::array<Scalar, 3> Sampler::line() {
  while (true) {
    std::array<Scalar, 3> c{coefficient(), coefficient(), coefficient()};
    if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero())) return c;
  }
}

}  // namespace polarmap
