#include "polarmap/differential.hpp"

#include "polarmap/error.hpp"
#include "polarmap/finite_field.hpp"
#include "polarmap/linalg.hpp"

namespace polarmap {

bool GradientTriple::satisfies_euler() const {
  TernaryForm sum(source.degree(), source.field());
  for (int i = 0; i < 3; ++i) sum = sum + TernaryForm::variable(i, source.field()) * parts[i];
  return sum == source.scaled(Scalar::integer(source.degree(), source.field()));
}

TernaryForm GradientTriple::weighted(const std::array<Scalar, 3>& weights) const {
  TernaryForm sum(source.degree() - 1, source.field());
  for (int i = 0; i < 3; ++i) sum = sum + parts[i].scaled(weights[i]);
  return sum;
}

std::array<Scalar, 3> GradientTriple::at(const ProjPoint& point) const {
  return {parts[0].evaluate(point), parts[1].evaluate(point), parts[2].evaluate(point)};
}

GradientTriple gradient(const TernaryForm& f) {
  if (f.degree() < 1) throw DomainError("gradient needs a form of degree at least 1");
  return {{f.derivative(0), f.derivative(1), f.derivative(2)}, f};
}

bool euler_check(const TernaryForm& f) {
  // Works term by term so that a corrupted (non-homogeneous) term map is
  // detected instead of tripping the degree checks of form arithmetic.
  const Scalar d = Scalar::integer(f.degree(), f.field());
  for (const auto& [e, c] : f.terms()) {
    const Scalar euler = Scalar::integer(total_degree(e), f.field()) * c;
    if (!(euler == d * c)) return false;
  }
  return true;
}

FormMatrix hessian_matrix(const TernaryForm& f) {
  if (f.degree() < 2) throw DomainError("Hessian needs a form of degree at least 2");
  FormMatrix m(3, 3, f.field());
  for (int i = 0; i < 3; ++i) {
    const TernaryForm di = f.derivative(i);
    for (int j = i; j < 3; ++j) {
      m(i, j) = di.derivative(j);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

TernaryForm hessian_det(const TernaryForm& f) {
  TernaryForm h = determinant(hessian_matrix(f));
  if (h.is_zero()) return TernaryForm(3 * (f.degree() - 2), f.field());
  return h;
}

bool is_cone(const TernaryForm& f) { return hessian_det(f).is_zero(); }

std::array<Scalar, 3> MinorTriple::at(const ProjPoint& point) const {
  return {m01.evaluate(point), m02.evaluate(point), m12.evaluate(point)};
}

bool MinorTriple::annihilated_by(const GradientTriple& row) const {
  return (row[0] * m12 - row[1] * m02 + row[2] * m01).is_zero();
}

MinorTriple gradient_minors(const TernaryForm& f, const TernaryForm& g) {
  if (f.degree() != g.degree()) {
    throw DegreeMismatch("gradient minors need forms of equal degree, got " +
                         std::to_string(f.degree()) + " and " + std::to_string(g.degree()));
  }
  if (f.field() != g.field()) throw FieldMismatch("gradient minors across fields");
  if (f.degree() < 2) throw DomainError("gradient minors need degree at least 2");
  const GradientTriple df = gradient(f);
  const GradientTriple dg = gradient(g);
  const int degree = 2 * f.degree() - 2;
  auto minor = [&](int i, int j) {
    TernaryForm m = df[i] * dg[j] - df[j] * dg[i];
    return m.is_zero() ? TernaryForm(degree, f.field()) : m;
  };
  return {minor(0, 1), minor(0, 2), minor(1, 2)};
}

LinearRelation find_linear_relation(const MinorTriple& minors) {
  const auto forms = minors.as_array();
  Field field = forms[0].field();
  int degree = forms[0].degree();
  for (const auto& m : forms) {
    if (!m.is_zero()) {
      degree = m.degree();
      field = m.field();
      break;
    }
  }
  LinearRelation out;
  if (minors.all_zero()) {
    out.degenerate = true;
    out.coefficients = std::array<Scalar, 3>{Scalar::one(field), Scalar::zero(field),
                                             Scalar::zero(field)};
    return out;
  }
  std::array<std::vector<Scalar>, 3> columns;
  for (int k = 0; k < 3; ++k) {
    if (!forms[k].is_zero() && forms[k].degree() != degree) {
      throw DegreeMismatch("minors of different degree");
    }
    columns[k] = coefficient_vector(forms[k], degree);
  }
  const std::size_t rows = monomials_of_degree(degree).size();
  ScalarMatrix m(rows, std::vector<Scalar>(3));
  for (std::size_t r = 0; r < rows; ++r) {
    for (int k = 0; k < 3; ++k) m[r][k] = columns[k][r];
  }
  const auto kernel = nullspace(m, 3, field);
  if (kernel.empty()) return out;
  std::array<Scalar, 3> a{kernel[0][0], kernel[0][1], kernel[0][2]};
  Scalar lead;
  for (const auto& c : a) {
    if (!c.is_zero()) {
      lead = c;
      break;
    }
  }
  for (auto& c : a) c = c / lead;
  out.coefficients = a;
  return out;
}

bool is_jacobian_syzygy(const TernaryForm& f, const SyzygyVector& s) {
  const GradientTriple df = gradient(f);
  TernaryForm sum(0, f.field());
  for (int i = 0; i < 3; ++i) sum = sum + s.h[i] * df[i];
  return sum.is_zero();
}

SyzygyVector syzygy_from_relation(const TernaryForm& f, const TernaryForm& g,
                                  const std::array<Scalar, 3>& a) {
  if (f.degree() != g.degree()) throw DegreeMismatch("syzygy needs forms of equal degree");
  const GradientTriple dg = gradient(g);
  const int e = g.degree() - 1;
  auto tagged = [&](TernaryForm h) { return h.is_zero() ? TernaryForm(e, g.field()) : h; };
  return {{tagged(dg[1].scaled(a[0]) + dg[2].scaled(a[1])),
           tagged(-(dg[0].scaled(a[0]) - dg[2].scaled(a[2]))),
           tagged(-(dg[0].scaled(a[1]) + dg[1].scaled(a[2])))}};
}

SyzygyVector koszul_combination(const TernaryForm& f, const std::array<Scalar, 3>& b) {
  const GradientTriple df = gradient(f);
  const int e = f.degree() - 1;
  auto tagged = [&](TernaryForm h) { return h.is_zero() ? TernaryForm(e, f.field()) : h; };
  return {{tagged(-(df[1].scaled(b[0]) + df[2].scaled(b[1]))),
           tagged(df[0].scaled(b[0]) - df[2].scaled(b[2])),
           tagged(df[0].scaled(b[1]) + df[1].scaled(b[2]))}};
}

std::optional<std::array<Scalar, 3>> syzygy_to_koszul(const TernaryForm& f, const SyzygyVector& s) {
  const int e = f.degree() - 1;
  for (const auto& h : s.h) {
    if (h.degree() != e) {
      throw DegreeMismatch("syzygy entries must have degree " + std::to_string(e) + ", got " +
                           std::to_string(h.degree()));
    }
  }
  if (!is_jacobian_syzygy(f, s)) throw DomainError("input is not a syzygy of the partials");
  const Field field = f.field();
  // Columns: coordinates of K01, K02, K12 stacked over the three entries.
  std::array<SyzygyVector, 3> basis;
  for (int k = 0; k < 3; ++k) {
    std::array<Scalar, 3> unit{Scalar::zero(field), Scalar::zero(field), Scalar::zero(field)};
    unit[k] = Scalar::one(field);
    basis[k] = koszul_combination(f, unit);
  }
  ScalarMatrix m;
  std::vector<Scalar> rhs;
  for (int entry = 0; entry < 3; ++entry) {
    std::array<std::vector<Scalar>, 3> cols;
    for (int k = 0; k < 3; ++k) cols[k] = coefficient_vector(basis[k].h[entry], e);
    const auto target = coefficient_vector(s.h[entry], e);
    for (std::size_t r = 0; r < target.size(); ++r) {
      m.push_back({cols[0][r], cols[1][r], cols[2][r]});
      rhs.push_back(target[r]);
    }
  }
  const auto solution = solve(m, rhs, 3, field);
  if (!solution) return std::nullopt;
  return std::array<Scalar, 3>{(*solution)[0], (*solution)[1], (*solution)[2]};
}

std::optional<Scalar> proportionality_factor(const TernaryForm& f, const TernaryForm& g) {
  if (f.is_zero() || f.field() != g.field() || f.degree() != g.degree()) return std::nullopt;
  const auto& [e, c] = *f.terms().begin();
  const Scalar lambda = g.coefficient(e) / c;
  if (!(g == f.scaled(lambda))) return std::nullopt;
  return lambda;
}

SmoothnessReport probable_smoothness(const TernaryForm& f, std::span<const std::uint64_t> primes) {
  SmoothnessReport report;
  const GradientTriple df = gradient(f);
  auto check = [&](std::uint64_t p, const std::array<TernaryForm, 3>& partials) {
    report.primes_checked.push_back(p);
    const ZeroSet zeros = common_zeros(partials);
    if (zeros.positive_dimensional || !zeros.points.empty()) {
      report.probably_smooth = false;
      if (report.witness_prime == 0) {
        report.witness_prime = p;
        if (!zeros.points.empty()) report.witness = zeros.points.front();
      }
    }
  };
  if (!f.field().is_rational()) {
    check(f.field().modulus(), df.parts);
    return report;
  }
  for (std::uint64_t p : primes) {
    std::array<TernaryForm, 3> reduced;
    try {
      for (int i = 0; i < 3; ++i) reduced[i] = reduce_mod_p(df[i], p);
      reduce_mod_p(f, p);
    } catch (const ReductionError&) {
      report.primes_skipped.push_back(p);
      continue;
    }
    check(p, reduced);
  }
  return report;
}

}  // namespace polarmap
