#include "polarmap/equivalence.hpp"

#include <algorithm>
#include <set>

#include "polarmap/error.hpp"
#include "polarmap/linalg.hpp"
#include "polarmap/matrix.hpp"

namespace polarmap {

namespace {

// Dense univariate polynomials over Q, lowest degree first, without trailing
// zeros. Only the Hesse cubic needs them.
using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<long>(k));
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Poly q(std::max<int>(degree(a) - degree(b) + 1, 0));
  while (!a.empty() && degree(a) >= degree(b)) {
    const int shift = degree(a) - degree(b);
    const mpq_class factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= factor * b[k];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly monic(Poly p) {
  const mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

mpq_class evaluate(const Poly& p, const mpq_class& t) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

/// Yun's algorithm: p = lead * prod_k f_k^k with squarefree, coprime f_k.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  Poly a = gcd(p, derivative(p));
  Poly b = divmod(p, a).first;
  Poly c = divmod(derivative(p), a).first;
  Poly d = c;
  {
    Poly db = derivative(b);
    d.resize(std::max(c.size(), db.size()), 0);
    for (std::size_t k = 0; k < db.size(); ++k) d[k] -= db[k];
    trim(d);
  }
  for (int k = 1; degree(b) > 0; ++k) {
    const Poly g = gcd(b, d);
    if (degree(g) > 0) out.emplace_back(g, k);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    Poly db = derivative(b);
    d = c;
    d.resize(std::max(c.size(), db.size()), 0);
    for (std::size_t i = 0; i < db.size(); ++i) d[i] -= db[i];
    trim(d);
  }
  return out;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    small.push_back(k);
    if (k * k != n) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Rational roots by the rational root test, each with its multiplicity.
std::vector<std::pair<mpq_class, int>> rational_roots(Poly p) {
  std::vector<std::pair<mpq_class, int>> out;
  int zero_mult = 0;
  while (!p.empty() && p.front() == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.emplace_back(0, zero_mult);
  if (degree(p) < 1) return out;
  mpz_class den_lcm = 1;
  for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  const mpz_class lead = mpq_class(p.back() * den_lcm).get_num();
  const mpz_class constant = mpq_class(p.front() * den_lcm).get_num();
  std::set<mpq_class> candidates;
  for (const auto& num : positive_divisors(constant)) {
    for (const auto& den : positive_divisors(lead)) {
      mpq_class r(num, den);
      r.canonicalize();
      candidates.insert(r);
      candidates.insert(-r);
    }
  }
  for (const auto& r : candidates) {
    int mult = 0;
    Poly q = p;
    while (degree(q) >= 1 && evaluate(q, r) == 0) {
      q = divmod(q, Poly{-r, 1}).first;
      ++mult;
    }
    if (mult > 0) out.emplace_back(r, mult);
  }
  return out;
}

void require_not_cone(const TernaryForm& f) {
  if (f.degree() < 2 || is_cone(f)) {
    throw ConeInputError("input is a cone (hess = 0): its partial derivatives are dependent");
  }
}

}  // namespace

ProportionalityResult same_ramification_test(const TernaryForm& f, const TernaryForm& g) {
  if (f.degree() != g.degree()) {
    throw DegreeMismatch("same-ramification test needs forms of equal degree");
  }
  if (f.degree() <= 3) {
    throw DomainError("refused: the same-ramification lemma assumes d >= 4, where the minors "
                      "(degree 2d-2) cannot contain H_f (degree 3d-6) unless they vanish; got d = " +
                      std::to_string(f.degree()));
  }
  require_not_cone(f);
  if (g.is_zero()) throw DomainError("the second form is zero");
  const MinorTriple minors = gradient_minors(f, g);
  ProportionalityResult out;
  if (!minors.all_zero()) {
    const auto forms = minors.as_array();
    for (int k = 0; k < 3; ++k) {
      if (!forms[k].is_zero()) {
        out.witness = forms[k];
        out.witness_index = k;
        break;
      }
    }
    return out;
  }
  // Proportional gradients: read lambda off matching coefficients of a
  // nonzero partial, then conclude g = lambda f from Euler's identity.
  const GradientTriple df = gradient(f);
  const GradientTriple dg = gradient(g);
  int i = 0;
  while (df[i].is_zero()) ++i;
  const Exponents& e = df[i].leading_monomial();
  const Scalar lambda = dg[i].coefficient(e) / df[i].leading_coefficient();
  for (int k = 0; k < 3; ++k) {
    if (!(dg[k] - df[k].scaled(lambda)).is_zero()) {
      throw Error("gradients have vanishing minors but are not proportional");
    }
  }
  if (!(g - f.scaled(lambda)).is_zero()) {
    throw Error("proportional gradients did not give proportional forms");
  }
  out.verdict = ProportionalityResult::Verdict::ProportionalForms;
  out.lambda = lambda;
  return out;
}

bool is_mammana_matrix(const TernaryForm& f, const ScalarMatrix3& a) {
  const FormMatrix m = hessian_matrix(f);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      TernaryForm diff(f.degree() - 2, f.field());
      for (int k = 0; k < 3; ++k) diff = diff + m(k, j).scaled(a[i][k]) - m(k, i).scaled(a[j][k]);
      if (!diff.is_zero()) return false;
    }
  }
  return true;
}

TernaryForm mammana_partner(const TernaryForm& f, const ScalarMatrix3& a) {
  const GradientTriple df = gradient(f);
  std::array<TernaryForm, 3> image;
  TernaryForm g(f.degree(), f.field());
  for (int i = 0; i < 3; ++i) {
    image[i] = df.weighted(a[i]);
    g = g + TernaryForm::variable(i, f.field()) * image[i];
  }
  g = g.scaled(Scalar::integer(f.degree(), f.field()).inverse());
  // Euler gives d*g = sum x_i (A grad f)_i; grad g = A grad f is the
  // integrability condition, equivalent to the symmetry of A M_f.
  const GradientTriple dg = gradient(g);
  for (int i = 0; i < 3; ++i) {
    if (!(dg[i] - image[i]).is_zero()) {
      throw Error("A grad f is not a gradient: A * M_f is not symmetric");
    }
  }
  return g;
}

MammanaSolution mammana_solve(const TernaryForm& f) {
  if (f.degree() < 3) throw DomainError("the Mammana solver needs degree at least 3");
  require_not_cone(f);
  const Field field = f.field();
  const FormMatrix m = hessian_matrix(f);
  const int e = f.degree() - 2;
  std::array<std::array<std::vector<Scalar>, 3>, 3> coords;
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 3; ++j) coords[k][j] = coefficient_vector(m(k, j), e);
  }
  const std::size_t monomials = monomials_of_degree(e).size();
  // Unknown a_{ik} sits in column 3i + k. (A M)_{ij} - (A M)_{ji} = 0 for i < j.
  ScalarMatrix system;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (std::size_t r = 0; r < monomials; ++r) {
        std::vector<Scalar> row(9, Scalar::zero(field));
        for (int k = 0; k < 3; ++k) {
          row[3 * i + k] += coords[k][j][r];
          row[3 * j + k] -= coords[k][i][r];
        }
        system.push_back(std::move(row));
      }
    }
  }
  MammanaSolution out;
  for (const auto& v : nullspace(system, 9, field)) {
    ScalarMatrix3 a;
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) a[i][k] = v[3 * i + k];
    }
    out.partners.push_back(mammana_partner(f, a));
    out.basis.push_back(a);
  }
  return out;
}

ScalarMatrix3 invertible_member(const MammanaSolution& solution) {
  if (solution.basis.empty()) throw DomainError("empty Mammana solution space");
  const Field field = solution.basis.front()[0][0].field();
  ScalarMatrix3 sum;
  for (auto& row : sum) row.fill(Scalar::zero(field));
  for (int k = 0; k < solution.dimension(); ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) sum[i][j] += Scalar::integer(k + 1, field) * solution.basis[k][i][j];
    }
  }
  // det(sum + c I) is monic of degree 3 in c, so one of c = 0..3 works.
  for (long c = 0; c <= 3; ++c) {
    ScalarMatrix3 a = sum;
    for (int i = 0; i < 3; ++i) a[i][i] += Scalar::integer(c, field);
    const Scalar det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    if (!det.is_zero()) return a;
  }
  throw Error("no invertible matrix found in the Mammana solution space");
}

bool polar_net_contains(const TernaryForm& f, const TernaryForm& g) {
  if (f.degree() != g.degree()) throw DegreeMismatch("polar nets of forms of different degree");
  const int e = f.degree() - 1;
  ScalarMatrix rows;
  for (int i = 0; i < 3; ++i) rows.push_back(coefficient_vector(f.derivative(i), e));
  const std::size_t cols = monomials_of_degree(e).size();
  if (rank(rows, cols) < 3) {
    throw ConeInputError("the partial derivatives span less than a net (cone input)");
  }
  for (int i = 0; i < 3; ++i) rows.push_back(coefficient_vector(g.derivative(i), e));
  return rank(rows, cols) == 3;
}

bool polar_net_equal(const TernaryForm& f, const TernaryForm& g) {
  if (f.degree() != g.degree()) throw DegreeMismatch("polar nets of forms of different degree");
  const int e = f.degree() - 1;
  ScalarMatrix rows_f;
  ScalarMatrix rows_g;
  for (int i = 0; i < 3; ++i) {
    rows_f.push_back(coefficient_vector(f.derivative(i), e));
    rows_g.push_back(coefficient_vector(g.derivative(i), e));
  }
  const std::size_t cols = monomials_of_degree(e).size();
  if (rank(rows_f, cols) < 3 || rank(rows_g, cols) < 3) {
    throw ConeInputError("the partial derivatives span less than a net (cone input)");
  }
  ScalarMatrix stacked = rows_f;
  stacked.insert(stacked.end(), rows_g.begin(), rows_g.end());
  return rank(stacked, cols) == 3;
}

bool sebastiani_thom_check(const TernaryForm& f, std::span<const int> block) {
  std::array<bool, 3> inside{false, false, false};
  for (int v : block) {
    if (v < 0 || v > 2) throw DomainError("variable index out of range in partition");
    inside[v] = true;
  }
  const auto count = std::count(inside.begin(), inside.end(), true);
  if (count == 0 || count == 3) throw DomainError("partition must be proper and nonempty");
  for (const auto& [e, c] : f.terms()) {
    bool uses_in = false;
    bool uses_out = false;
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      (inside[v] ? uses_in : uses_out) = true;
    }
    if (uses_in && uses_out) return false;
  }
  return true;
}

int point_multiplicity(const TernaryForm& f, const ProjPoint& point) {
  if (f.is_zero()) throw DomainError("multiplicity on the zero form");
  if (!f.evaluate(point).is_zero()) return 0;
  // Coordinates with `point` as the first basis vector.
  const Field field = f.field();
  const int k = point.pivot();
  ScalarMatrix3 t;
  for (auto& row : t) row.fill(Scalar::zero(field));
  int col = 1;
  for (int i = 0; i < 3; ++i) t[i][0] = point[i];
  for (int j = 0; j < 3; ++j) {
    if (j == k) continue;
    t[j][col++] = Scalar::one(field);
  }
  const TernaryForm moved = f.substitute_linear(t);
  int top = 0;
  for (const auto& [e, c] : moved.terms()) top = std::max(top, e[0]);
  return f.degree() - top;
}

TernaryForm type14_generate(const Type14Spec& spec) {
  if (spec.h != 0) throw DomainError("h must be 0 in three variables");
  const TernaryForm& alpha = spec.alpha;
  const int d = alpha.degree();
  if (alpha.is_zero() || d < 1) throw DomainError("alpha is constant: its derivative vanishes");
  if (alpha.term_count() != 1 || alpha.leading_monomial() != Exponents{0, d, 0}) {
    throw DomainError("alpha must be a nonzero multiple of x1^" + std::to_string(d));
  }
  if (spec.beta.degree() != d) {
    throw DomainError("beta must have the degree of alpha (" + std::to_string(d) + ")");
  }
  for (const auto& [e, c] : spec.beta.terms()) {
    if (e[0] != 0) throw DomainError("beta must not involve x0");
  }
  const TernaryForm f = TernaryForm::variable(0, alpha.field()) * alpha.derivative(1) + spec.beta;
  const int mult = point_multiplicity(f, coordinate_point(0, f.field()));
  if (mult < d - 1) {
    throw Error("(1:0:0) has multiplicity " + std::to_string(mult) + " < d - 1 on " +
                f.to_string());
  }
  return f;
}

Type14Spec random_type14(int degree, Sampler& sampler) {
  if (degree < 2) throw DomainError("type (14) forms need degree at least 2");
  Type14Spec spec;
  spec.alpha = TernaryForm::monomial({0, degree, 0}, sampler.nonzero_coefficient());
  TernaryForm::Terms terms;
  for (int k = 0; k <= degree; ++k) terms.emplace(Exponents{0, k, degree - k}, sampler.coefficient());
  spec.beta = TernaryForm::from_terms(std::move(terms), degree, Field::rationals());
  return spec;
}

TernaryForm hesse_member(const Scalar& m) {
  TernaryForm::Terms terms;
  terms.emplace(Exponents{3, 0, 0}, Scalar(1));
  terms.emplace(Exponents{0, 3, 0}, Scalar(1));
  terms.emplace(Exponents{0, 0, 3}, Scalar(1));
  terms.emplace(Exponents{1, 1, 1}, Scalar(6) * m);
  return TernaryForm::from_terms(std::move(terms), 3, Field::rationals());
}

HesseParam hesse_hessian_param(const Scalar& m) {
  HesseParam out;
  out.m = m;
  out.hessian = hessian_det(hesse_member(m));
  const Scalar m2 = m * m;
  const Scalar m3 = m2 * m;
  TernaryForm::Terms terms;
  for (const Exponents& e : {Exponents{3, 0, 0}, Exponents{0, 3, 0}, Exponents{0, 0, 3}}) {
    terms.emplace(e, Scalar(-216) * m2);
  }
  terms.emplace(Exponents{1, 1, 1}, Scalar(216) * (Scalar(1) + Scalar(2) * m3));
  const TernaryForm expected = TernaryForm::from_terms(std::move(terms), 3, Field::rationals());
  if (!(out.hessian - expected).is_zero()) {
    throw Error("Hessian of the pencil member differs from the closed form");
  }
  if (m.is_zero()) {
    out.proportionality = Scalar(216);
    return out;
  }
  out.mu_prime = -(Scalar(1) + Scalar(2) * m3) / (Scalar(6) * m2);
  out.proportionality = Scalar(-216) * m2;
  if (!(out.hessian - hesse_member(*out.mu_prime).scaled(out.proportionality)).is_zero()) {
    throw Error("Hessian of the pencil member is not proportional to f_mu'");
  }
  return out;
}

HessePreimageCount hesse_preimage_count(const Scalar& mu) {
  HessePreimageCount out;
  out.target = mu;
  out.cubic = {Scalar(1), Scalar(0), Scalar(6) * mu, Scalar(2)};
  const mpq_class b = (Scalar(6) * mu).rational_value();
  // a m^3 + b m^2 + c m + d with a = 2, c = 0, d = 1.
  out.discriminant = Scalar(mpq_class(-4 * b * b * b - 27 * 4));
  Poly p{1, 0, b, 2};
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    out.with_multiplicity += mult * degree(factor);
    out.distinct += degree(factor);
  }
  for (const auto& [root, mult] : rational_roots(p)) out.rational_roots.emplace_back(Scalar(root), mult);
  return out;
}

}  // namespace polarmap
