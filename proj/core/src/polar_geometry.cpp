#include "polarmap/polar_geometry.hpp"

#include <map>

#include "polarmap/elimination.hpp"
#include "polarmap/error.hpp"
#include "polarmap/finite_field.hpp"
#include "polarmap/linalg.hpp"

namespace polarmap {

namespace {

using Matrix3 = std::array<std::array<Scalar, 3>, 3>;

void require_not_cone(const TernaryForm& f) {
  if (f.degree() < 2 || is_cone(f)) {
    throw ConeInputError("input is a cone (hess = 0): its partial derivatives are dependent");
  }
}

std::uint64_t working_prime(const TernaryForm& f, std::uint64_t prime) {
  return f.field().is_rational() ? prime : f.field().modulus();
}

CountReport count_pair(CountKind kind, const TernaryForm& a, const TernaryForm& b,
                       std::uint64_t prime) {
  CountReport report;
  report.kind = kind;
  report.prime = working_prime(a, prime);
  const IntersectionCount ic = bezout_count(a, b);
  report.variable = ic.variable;
  if (ic.with_multiplicity) {
    report.with_multiplicity = *ic.with_multiplicity;
  } else {
    report.common_component = squarefree_part(ic.common_factor);
  }
  const std::array<TernaryForm, 2> reduced{reduce_mod_p(a, report.prime),
                                           reduce_mod_p(b, report.prime)};
  const ZeroSet zeros = common_zeros(reduced);
  report.points = zeros.points;
  report.positive_dimensional = zeros.positive_dimensional;
  return report;
}

bool is_zero_vector(const std::array<Scalar, 3>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

/// x = s*a + t*b, as a substitution into the first two variables.
Matrix3 line_through(const ProjPoint& a, const ProjPoint& b) {
  const Scalar zero = Scalar::zero(a.field());
  return {{{a[0], b[0], zero}, {a[1], b[1], zero}, {a[2], b[2], zero}}};
}

}  // namespace

int YLinearForm::x_degree() const {
  for (const auto& c : coeff) {
    if (!c.is_zero()) return c.degree();
  }
  return coeff[0].degree();
}

TernaryForm YLinearForm::at_y(const std::array<Scalar, 3>& y) const {
  TernaryForm sum(x_degree(), coeff[0].field());
  for (int i = 0; i < 3; ++i) sum = sum + coeff[i].scaled(y[i]);
  return sum;
}

std::array<Scalar, 3> YLinearForm::at_x(const ProjPoint& x) const {
  return {coeff[0].evaluate(x), coeff[1].evaluate(x), coeff[2].evaluate(x)};
}

Scalar YLinearForm::evaluate(const ProjPoint& x, const std::array<Scalar, 3>& y) const {
  const auto c = at_x(x);
  return c[0] * y[0] + c[1] * y[1] + c[2] * y[2];
}

bool YLinearForm::is_zero() const {
  return coeff[0].is_zero() && coeff[1].is_zero() && coeff[2].is_zero();
}

std::string YLinearForm::to_string() const {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (coeff[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeff[i].to_string() + ")*y" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::vector<YLinearForm> GraphSystem::essential() const {
  std::vector<YLinearForm> out;
  for (const auto& eq : equations) {
    if (eq.i < eq.j) out.push_back(eq.form);
  }
  return out;
}

std::string to_string(CountKind kind) {
  switch (kind) {
    case CountKind::Fiber: return "fiber";
    case CountKind::GraphSlice: return "graph-slice";
    case CountKind::Branch: return "branch";
    case CountKind::Steinerian: return "steinerian";
    case CountKind::NuFiber: return "nu-fiber";
  }
  return "unknown";
}

std::string to_string(ProductVerdict verdict) {
  switch (verdict) {
    case ProductVerdict::Product: return "product";
    case ProductVerdict::PerComponentProduct: return "per-component-product";
    case ProductVerdict::NotProduct: return "not-product";
    case ProductVerdict::Degenerate: return "degenerate";
  }
  return "unknown";
}

ProjPoint polar_eval(const TernaryForm& f, const ProjPoint& point) {
  const auto image = gradient(f).at(point);
  if (is_zero_vector(image)) {
    throw IndeterminateError("all partial derivatives vanish at " + point.to_string() +
                             " (singular point)");
  }
  return ProjPoint(image);
}

FiberSystem fiber_system(const TernaryForm& f, const ProjPoint& target) {
  require_not_cone(f);
  const GradientTriple df = gradient(f);
  FiberSystem fs{target, target.pivot(), {TernaryForm(), TernaryForm()}};
  const int k = fs.pivot;
  int slot = 0;
  for (int j = 0; j < 3; ++j) {
    if (j == k) continue;
    fs.eqs[slot++] = df[j].scaled(target[k]) - df[k].scaled(target[j]);
  }
  return fs;
}

CountReport fiber_degree(const TernaryForm& f, const ProjPoint& target, std::uint64_t prime) {
  const FiberSystem fs = fiber_system(f, target);
  return count_pair(CountKind::Fiber, fs.eqs[0], fs.eqs[1], prime);
}

CountReport branch_degree_count(const TernaryForm& f, const std::array<Scalar, 3>& ell,
                                std::uint64_t prime) {
  require_not_cone(f);
  if (is_zero_vector(ell)) throw DomainError("the zero vector is not a line");
  const TernaryForm pulled = gradient(f).weighted(ell);
  return count_pair(CountKind::Branch, hessian_det(f), pulled, prime);
}

GraphSystem graph_system(const TernaryForm& f) {
  const GradientTriple df = gradient(f);
  const TernaryForm zero(f.degree() - 1, f.field());
  GraphSystem gs;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      YLinearForm form{{zero, zero, zero}};
      form.coeff[i] = df[j];
      form.coeff[j] = -df[i];
      gs.equations.push_back({i, j, form});
    }
  }
  return gs;
}

GraphSliceCounts graph_slice_counts(const TernaryForm& f, Sampler& sampler) {
  require_not_cone(f);
  const GradientTriple df = gradient(f);
  const auto essential = graph_system(f).essential();
  GraphSliceCounts out;

  bool done = false;
  for (int attempt = 0; attempt <= kMaxRedraws && !done; ++attempt) {
    const ProjPoint p = sampler.point();
    ScalarMatrix m;
    for (const auto& eq : essential) {
      const auto row = eq.at_x(p);
      m.push_back({row[0], row[1], row[2]});
    }
    if (is_zero_vector(df.at(p))) continue;
    const auto kernel = nullspace(m, 3, f.field());
    if (kernel.size() != 1) continue;
    out.n1 = 1;
    done = true;
  }
  if (!done) throw DegenerateError("no point with a well-defined graph fiber was drawn");

  done = false;
  for (int attempt = 0; attempt <= kMaxRedraws && !done; ++attempt) {
    const TernaryForm l1 = TernaryForm::linear(sampler.line());
    const TernaryForm l2 = df.weighted(sampler.line());
    if (l2.is_zero()) continue;
    const IntersectionCount ic = bezout_count(l1, l2);
    if (!ic.with_multiplicity) continue;
    out.n12 = *ic.with_multiplicity;
    done = true;
  }
  if (!done) throw DegenerateError("every mixed slice of the graph was degenerate");

  done = false;
  for (int attempt = 0; attempt <= kMaxRedraws && !done; ++attempt) {
    const FiberSystem fs = fiber_system(f, sampler.point());
    try {
      const IntersectionCount ic = bezout_count(fs.eqs[0], fs.eqs[1]);
      if (!ic.with_multiplicity) continue;
      out.n2 = *ic.with_multiplicity;
      done = true;
    } catch (const DegenerateError&) {
    }
  }
  if (!done) throw DegenerateError("every sampled fiber was degenerate");
  return out;
}

std::array<YLinearForm, 3> steinerian_system(const TernaryForm& f) {
  if (f.degree() < 3) throw DomainError("the Steinerian system needs degree at least 3");
  const FormMatrix m = hessian_matrix(f);
  std::array<YLinearForm, 3> rows;
  for (int i = 0; i < 3; ++i) rows[i] = YLinearForm{{m(i, 0), m(i, 1), m(i, 2)}};
  return rows;
}

SteinerianCounts steinerian_slice_counts(const TernaryForm& f, Sampler& sampler) {
  require_not_cone(f);
  if (f.degree() < 3) throw DomainError("Steinerian counts need degree at least 3");
  const TernaryForm hess = hessian_det(f);
  SteinerianCounts out;

  bool done = false;
  for (int attempt = 0; attempt <= kMaxRedraws && !done; ++attempt) {
    const ProjPoint a = sampler.point();
    const ProjPoint b = sampler.point();
    if (a == b) continue;
    const TernaryForm restricted = hess.substitute_linear(line_through(a, b));
    if (restricted.is_zero()) continue;
    // A nonzero binary form has as many roots on P^1, with multiplicity, as its degree.
    out.c1 = restricted.degree();
    done = true;
  }
  if (!done) throw DegenerateError("every sampled line lies on the Hessian curve");

  const auto rows = steinerian_system(f);
  for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
    const auto y1 = sampler.line();
    const auto y2 = sampler.line();
    std::array<std::array<TernaryForm, 2>, 3> n;
    for (int i = 0; i < 3; ++i) n[i] = {rows[i].at_y(y1), rows[i].at_y(y2)};
    const TernaryForm d01 = n[0][0] * n[1][1] - n[0][1] * n[1][0];
    const TernaryForm d02 = n[0][0] * n[2][1] - n[0][1] * n[2][0];
    if (d01.is_zero() || d02.is_zero() || n[0][0].is_zero() || n[0][1].is_zero()) continue;
    if (d01.degree() == 0 || n[0][0].degree() == 0) continue;
    for (int var : {2, 1, 0}) {
      Exponents e{0, 0, 0};
      auto through = [&](const TernaryForm& h) {
        e = {0, 0, 0};
        e[var] = h.degree();
        return h.coefficient(e).is_zero();
      };
      if (through(d01) && through(d02)) continue;
      if (through(n[0][0]) && through(n[0][1])) continue;
      const Resultant full = resultant_elim(d01, d02, var);
      const Resultant extraneous = resultant_elim(n[0][0], n[0][1], var);
      if (full.value.is_zero() || extraneous.value.is_zero()) break;
      const auto quotient = divides(extraneous.value, full.value);
      if (!quotient) break;
      out.c2 = quotient->degree();
      return out;
    }
  }
  throw DegenerateError("M_f * y = 0 has no generic rank-2 slice: the kernel jumps along a "
                        "component of the Hessian curve");
}

ProjPoint nu_eval(const TernaryForm& f, const TernaryForm& g, const ProjPoint& point) {
  const MinorTriple minors = gradient_minors(f, g);
  if (find_linear_relation(minors).coefficients) {
    throw DomainError("the gradient minors of f and g are linearly dependent");
  }
  const auto image = minors.at(point);
  if (is_zero_vector(image)) {
    throw IndeterminateError(point.to_string() + " is a base point: grad f and grad g are "
                             "proportional there");
  }
  return ProjPoint(image);
}

CountReport nu_fiber_bound(const TernaryForm& f, const TernaryForm& g, const ProjPoint& target,
                           std::uint64_t prime) {
  require_not_cone(f);
  require_not_cone(g);
  const MinorTriple minors = gradient_minors(f, g);
  if (find_linear_relation(minors).coefficients) {
    throw DomainError("the gradient minors of f and g are linearly dependent");
  }
  // (m01 : m02 : m12) = Q exactly when grad f and grad g lie on the line
  // with coefficients (q2, -q1, q0).
  const std::array<Scalar, 3> weights{target[2], -target[1], target[0]};
  return count_pair(CountKind::NuFiber, gradient(f).weighted(weights),
                    gradient(g).weighted(weights), prime);
}

ZfgSystem zfg_build(const TernaryForm& f, const TernaryForm& g) {
  ZfgSystem z;
  z.minors = gradient_minors(f, g);
  z.eq1 = hessian_det(f);
  z.eq2 = YLinearForm{{z.minors.m12, -z.minors.m02, z.minors.m01}};
  z.degenerate = z.minors.all_zero();
  return z;
}

ProductTestResult zfg_product_test(const TernaryForm& f, const TernaryForm& g,
                                   std::uint64_t prime, std::uint64_t seed) {
  require_not_cone(f);
  const ZfgSystem z = zfg_build(f, g);
  ProductTestResult out;
  out.prime = working_prime(f, prime);
  if (z.degenerate) {
    out.note = "all gradient minors vanish identically (proportional gradients)";
    return out;
  }
  const Field field = f.field();
  out.hessian_reduced = squarefree_part(z.eq1);
  const auto minors = z.minors.as_array();

  // Support of the vertical components: zeros of the minor vector on H_f.
  std::vector<TernaryForm> reduced{reduce_mod_p(z.eq1, out.prime)};
  for (const auto& m : minors) reduced.push_back(reduce_mod_p(m, out.prime));
  const ZeroSet vertical = common_zeros(reduced);
  out.vertical_points = vertical.points;

  std::array<TernaryForm, 3> rem;
  for (int i = 0; i < 3; ++i) rem[i] = divide(minors[i], out.hessian_reduced).remainder;
  if (rem[0].is_zero() && rem[1].is_zero() && rem[2].is_zero()) {
    out.note = "the minor vector vanishes on all of H_f";
    return out;
  }

  const int degree = minors[0].degree();
  std::array<std::vector<Scalar>, 3> coords;
  for (int i = 0; i < 3; ++i) coords[i] = coefficient_vector(rem[i], degree);
  ScalarMatrix system;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      // v_j * N_i - v_i * N_j = 0, coefficientwise.
      for (std::size_t r = 0; r < coords[i].size(); ++r) {
        std::vector<Scalar> row(3, Scalar::zero(field));
        row[j] = coords[i][r];
        row[i] = -coords[j][r];
        system.push_back(std::move(row));
      }
    }
  }
  const auto kernel = nullspace(system, 3, field);
  if (!kernel.empty()) {
    const auto& v = kernel.front();
    out.verdict = ProductVerdict::Product;
    out.minor_vector = ProjPoint(v[0], v[1], v[2]);
    out.line = ProjPoint(v[2], -v[1], v[0]);
    out.note = "the minor vector is constant along H_f modulo its squarefree part";
    return out;
  }

  // No single constant vector: test local constancy along each component.
  // w = x cross grad h is tangent to every component of V(h), and v is
  // projectively constant along a component iff v_i D(v_j) - v_j D(v_i)
  // vanishes there, with D the derivation along w.
  const TernaryForm& h = out.hessian_reduced;
  const GradientTriple dh = gradient(h);
  std::array<TernaryForm, 3> w;
  for (int k = 0; k < 3; ++k) {
    const int a = (k + 1) % 3;
    const int b = (k + 2) % 3;
    w[k] = TernaryForm::variable(a, field) * dh[b] - TernaryForm::variable(b, field) * dh[a];
  }
  std::array<TernaryForm, 3> along;
  for (int i = 0; i < 3; ++i) {
    along[i] = TernaryForm(degree + h.degree() - 1, field);
    for (int k = 0; k < 3; ++k) along[i] = along[i] + w[k] * minors[i].derivative(k);
  }
  bool locally_constant = true;
  for (int i = 0; i < 3 && locally_constant; ++i) {
    for (int j = i + 1; j < 3 && locally_constant; ++j) {
      const TernaryForm cross = minors[i] * along[j] - minors[j] * along[i];
      if (!cross.is_zero() && !divide(cross, h).remainder.is_zero()) locally_constant = false;
    }
  }

  // Images and witnesses over F_p, for the report.
  const TernaryForm h_p = reduce_mod_p(h, out.prime);
  std::array<TernaryForm, 3> minors_p;
  for (int i = 0; i < 3; ++i) minors_p[i] = reduce_mod_p(minors[i], out.prime);
  std::map<std::array<std::uint64_t, 3>, ProjPoint> images;
  for (const ProjPoint& pt : sample_curve_points(h_p, 24, seed)) {
    const std::array<Scalar, 3> v{minors_p[0].evaluate(pt), minors_p[1].evaluate(pt),
                                  minors_p[2].evaluate(pt)};
    if (is_zero_vector(v)) continue;
    const ProjPoint image(v);
    if (images.emplace(point_key(image), image).second && out.witness.size() < 2) {
      out.witness.push_back(pt);
    }
  }
  if (locally_constant) {
    out.verdict = ProductVerdict::PerComponentProduct;
    for (auto& [key, image] : images) out.component_images.push_back(image);
    out.witness.clear();
    out.note = "H_f is reducible; the minor vector is constant on each "
               "component but not globally";
    return out;
  }
  out.verdict = ProductVerdict::NotProduct;
  out.note = "the minor vector is not constant along H_f; " + std::to_string(images.size()) +
             " distinct values on sampled points over F_p";
  return out;
}

}  // namespace polarmap
