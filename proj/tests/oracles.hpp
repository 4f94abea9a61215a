#pragma once

// Reference computations used to cross-check the library. They read only the
// term maps of forms and use plain GMP arithmetic, sharing no code paths with
// the algorithms under test.

#include <array>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "polarmap/form.hpp"

namespace oracle {

using polarmap::TernaryForm;
using Point = std::array<mpq_class, 3>;
/// Univariate polynomial, lowest degree first.
using Poly = std::vector<mpq_class>;

inline mpq_class power(const mpq_class& base, int e) {
  mpq_class out = 1;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

inline mpq_class evaluate(const TernaryForm& f, const Point& p) {
  mpq_class sum = 0;
  for (const auto& [e, c] : f.terms()) {
    sum += c.rational_value() * power(p[0], e[0]) * power(p[1], e[1]) * power(p[2], e[2]);
  }
  return sum;
}

/// d^2 f / dx_i dx_j at p, differentiating monomials directly.
inline mpq_class second_partial(const TernaryForm& f, int i, int j, const Point& p) {
  mpq_class sum = 0;
  for (const auto& [e, c] : f.terms()) {
    std::array<int, 3> k = e;
    mpq_class factor = k[i];
    k[i] -= 1;
    factor *= k[j];
    k[j] -= 1;
    if (factor == 0) continue;
    sum += c.rational_value() * factor * power(p[0], k[0]) * power(p[1], k[1]) *
           power(p[2], k[2]);
  }
  return sum;
}

inline mpq_class first_partial(const TernaryForm& f, int i, const Point& p) {
  mpq_class sum = 0;
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    std::array<int, 3> k = e;
    k[i] -= 1;
    sum += c.rational_value() * e[i] * power(p[0], k[0]) * power(p[1], k[1]) *
           power(p[2], k[2]);
  }
  return sum;
}

inline mpq_class det3(const std::array<std::array<mpq_class, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline mpq_class hessian_at(const TernaryForm& f, const Point& p) {
  std::array<std::array<mpq_class, 3>, 3> m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = second_partial(f, i, j, p);
  }
  return det3(m);
}

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (degree(a) >= degree(b)) {
    const mpq_class q = a.back() / b.back();
    const int shift = degree(a) - degree(b);
    for (int k = 0; k <= degree(b); ++k) a[shift + k] -= q * b[k];
    trim(a);
  }
  return a;
}

/// Resultant by the Euclidean recursion
/// Res(A, B) = (-1)^{mn} lc(B)^{m - deg R} Res(B, R), R = A mod B.
inline mpq_class resultant(Poly a, Poly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  mpq_class sign_scale = 1;
  for (;;) {
    const int m = degree(a);
    const int n = degree(b);
    if (n == 0) return sign_scale * power(b[0], m);
    Poly r = remainder(a, b);
    if (r.empty()) return 0;
    if ((m * n) % 2 == 1) sign_scale = -sign_scale;
    sign_scale *= power(b.back(), m - degree(r));
    a = std::move(b);
    b = std::move(r);
  }
}

/// f(c0, c1, t) as a polynomial in t = x2.
inline Poly restrict_x2(const TernaryForm& f, const mpq_class& c0, const mpq_class& c1) {
  Poly out(static_cast<std::size_t>(f.degree()) + 1, 0);
  for (const auto& [e, c] : f.terms()) {
    out[e[2]] += c.rational_value() * power(c0, e[0]) * power(c1, e[1]);
  }
  return out;
}

inline std::uint64_t mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  mpz_class r;
  const mpz_class base = static_cast<unsigned long>(a);
  const mpz_class m = static_cast<unsigned long>(p);
  mpz_invert(r.get_mpz_t(), base.get_mpz_t(), m.get_mpz_t());
  return r.get_ui();
}

/// Value of a rational form at an F_p point, computed term by term.
inline std::uint64_t evaluate_mod(const TernaryForm& f, const std::array<std::uint64_t, 3>& x,
                                  std::uint64_t p) {
  std::uint64_t sum = 0;
  for (const auto& [e, c] : f.terms()) {
    const mpq_class& q = c.rational_value();
    std::uint64_t t = mod(q.get_num(), p) * inverse(mod(q.get_den(), p), p) % p;
    for (int v = 0; v < 3; ++v) {
      for (int k = 0; k < e[v]; ++k) t = t * x[v] % p;
    }
    sum = (sum + t) % p;
  }
  return sum;
}

/// Every point of P^2(F_p), normalized with first nonzero coordinate 1, in
/// the order (1:a:b), (0:1:b), (0:0:1).
inline std::vector<std::array<std::uint64_t, 3>> all_points(std::uint64_t p) {
  std::vector<std::array<std::uint64_t, 3>> out;
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) out.push_back({1, a, b});
  }
  for (std::uint64_t b = 0; b < p; ++b) out.push_back({0, 1, b});
  out.push_back({0, 0, 1});
  return out;
}

/// Common zeros by exhaustive evaluation over P^2(F_p).
inline std::vector<std::array<std::uint64_t, 3>> brute_force_zeros(
    const std::vector<TernaryForm>& forms, std::uint64_t p) {
  std::vector<std::array<std::uint64_t, 3>> out;
  for (const auto& x : all_points(p)) {
    bool zero = true;
    for (const auto& f : forms) zero = zero && evaluate_mod(f, x, p) == 0;
    if (zero) out.push_back(x);
  }
  return out;
}

}  // namespace oracle
