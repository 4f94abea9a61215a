#include "polarmap/elimination.hpp"

#include <algorithm>

#include "polarmap/error.hpp"
#include "polarmap/linalg.hpp"
#include "polarmap/matrix.hpp"

namespace polarmap {

namespace {

bool divisible(const Exponents& e, const Exponents& by) {
  return e[0] >= by[0] && e[1] >= by[1] && e[2] >= by[2];
}

void accumulate(TernaryForm::Terms& terms, const Exponents& e, const Scalar& c) {
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

DivisionResult divide(const TernaryForm& dividend, const TernaryForm& divisor) {
  if (divisor.is_zero()) throw DomainError("division by the zero form");
  if (dividend.field() != divisor.field()) throw FieldMismatch("division across fields");
  const Field field = dividend.field();
  const Exponents lead = divisor.leading_monomial();
  const Scalar lead_inverse = divisor.leading_coefficient().inverse();

  TernaryForm::Terms rest = dividend.terms();
  TernaryForm::Terms quotient;
  TernaryForm::Terms remainder;
  while (!rest.empty()) {
    const auto top = rest.begin();
    const Exponents e = top->first;
    if (!divisible(e, lead)) {
      remainder.emplace(e, top->second);
      rest.erase(top);
      continue;
    }
    const Exponents shift{e[0] - lead[0], e[1] - lead[1], e[2] - lead[2]};
    const Scalar factor = top->second * lead_inverse;
    quotient.emplace(shift, factor);
    for (const auto& [d, c] : divisor.terms()) {
      accumulate(rest, {d[0] + shift[0], d[1] + shift[1], d[2] + shift[2]}, -(factor * c));
    }
  }
  const int qdeg = dividend.degree() - divisor.degree();
  return {TernaryForm::from_terms(std::move(quotient), qdeg, field),
          TernaryForm::from_terms(std::move(remainder), dividend.degree(), field)};
}

std::optional<TernaryForm> divides(const TernaryForm& a, const TernaryForm& b) {
  if (a.is_zero()) throw DomainError("divisibility test by the zero form");
  if (b.is_zero()) return TernaryForm(b.degree() - a.degree(), b.field());
  if (b.degree() < a.degree()) return std::nullopt;
  auto [q, r] = divide(b, a);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

TernaryForm exact_quotient(const TernaryForm& b, const TernaryForm& a) {
  auto q = divides(a, b);
  if (!q) throw Error("inexact division of " + b.to_string() + " by " + a.to_string());
  return *q;
}

Scalar content(const TernaryForm& f) {
  const Field field = f.field();
  if (f.is_zero()) return Scalar::zero(field);
  if (!field.is_rational()) return f.leading_coefficient();
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [e, c] : f.terms()) {
    const mpq_class& q = c.rational_value();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  mpq_class result(num_gcd, den_lcm);
  result.canonicalize();
  if (f.leading_coefficient().sign() < 0) result = -result;
  return Scalar(result);
}

TernaryForm primitive_part(const TernaryForm& f) {
  if (f.is_zero()) return f;
  return f.scaled(content(f).inverse());
}

Resultant resultant_elim(const TernaryForm& a, const TernaryForm& b, int var) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant of a zero form");
  if (a.field() != b.field()) throw FieldMismatch("resultant across fields");
  if (var < 0 || var > 2) throw DomainError("elimination variable must be 0, 1 or 2");
  const int n = a.degree_in(var);
  const int m = b.degree_in(var);
  if (n == 0 && m == 0) {
    throw DomainError("both forms are independent of x" + std::to_string(var));
  }
  const Field field = a.field();
  const auto size = static_cast<std::size_t>(n + m);
  std::vector<std::vector<TernaryForm>> sylvester(
      size, std::vector<TernaryForm>(size, TernaryForm(0, field)));
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) sylvester[i][i + k] = a.coefficient_in(var, n - k);
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) sylvester[m + i][i + k] = b.coefficient_in(var, m - k);
  }
  Resultant out;
  out.variable = var;
  out.value = bareiss_determinant(std::move(sylvester), field);
  if (out.value.is_zero()) {
    // Tag the zero with the degree the resultant would have had.
    out.value = TernaryForm(a.degree() * m + b.degree() * n - n * m, field);
  }
  out.content = content(out.value);
  out.primitive = primitive_part(out.value);
  return out;
}

TernaryForm form_gcd(const TernaryForm& a, const TernaryForm& b) {
  if (a.field() != b.field()) throw FieldMismatch("gcd across fields");
  const Field field = a.field();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const TernaryForm one = TernaryForm::constant(Scalar::one(field));
  if (a.degree() == 0 || b.degree() == 0) return one;

  // deg gcd(a, b) >= j  iff  a*v = b*u has a nonzero solution with
  // deg u = deg a - j and deg v = deg b - j. Scan j downwards.
  for (int j = std::min(a.degree(), b.degree()); j >= 1; --j) {
    const auto u_monomials = monomials_of_degree(a.degree() - j);
    const auto v_monomials = monomials_of_degree(b.degree() - j);
    const int target = a.degree() + b.degree() - j;
    const std::size_t rows = monomials_of_degree(target).size();
    const std::size_t cols = u_monomials.size() + v_monomials.size();
    ScalarMatrix system(rows, std::vector<Scalar>(cols, Scalar::zero(field)));
    for (std::size_t c = 0; c < u_monomials.size(); ++c) {
      for (const auto& [e, coeff] : b.terms()) {
        const Exponents& mu = u_monomials[c];
        system[monomial_index({e[0] + mu[0], e[1] + mu[1], e[2] + mu[2]})][c] = -coeff;
      }
    }
    for (std::size_t c = 0; c < v_monomials.size(); ++c) {
      for (const auto& [e, coeff] : a.terms()) {
        const Exponents& nu = v_monomials[c];
        system[monomial_index({e[0] + nu[0], e[1] + nu[1], e[2] + nu[2]})]
              [u_monomials.size() + c] = coeff;
      }
    }
    const auto kernel = nullspace(system, cols, field);
    if (kernel.empty()) continue;
    const std::span<const Scalar> u_coords(kernel.front().data(), u_monomials.size());
    const TernaryForm cofactor = form_from_vector(u_coords, a.degree() - j, field);
    return exact_quotient(a, cofactor).monic();
  }
  return one;
}

TernaryForm squarefree_part(const TernaryForm& f) {
  if (f.is_zero()) throw DomainError("squarefree part of the zero form");
  if (f.degree() <= 1) return f.monic();
  TernaryForm repeated = f;
  for (int i = 0; i < 3; ++i) {
    const TernaryForm partial = f.derivative(i);
    if (!partial.is_zero()) repeated = form_gcd(repeated, partial);
  }
  return exact_quotient(f, repeated).monic();
}

IntersectionCount bezout_count(const TernaryForm& a, const TernaryForm& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("intersection with the zero form");
  IntersectionCount out;
  out.common_factor = TernaryForm::constant(Scalar::one(a.field()));
  if (a.degree() == 0 || b.degree() == 0) {
    out.with_multiplicity = 0;
    return out;
  }
  for (int var : {2, 1, 0}) {
    Exponents ea{0, 0, 0};
    ea[var] = a.degree();
    Exponents eb{0, 0, 0};
    eb[var] = b.degree();
    // The chart loses intersections at e_var only if both curves pass through it.
    if (a.coefficient(ea).is_zero() && b.coefficient(eb).is_zero()) continue;
    out.variable = var;
    out.resultant = resultant_elim(a, b, var);
    if (out.resultant->value.is_zero()) {
      out.common_factor = form_gcd(a, b);
    } else {
      out.with_multiplicity = out.resultant->primitive.degree();
    }
    return out;
  }
  throw DegenerateError("all three elimination charts degenerate: the coordinate points are "
                        "common zeros");
}

}  // namespace polarmap
