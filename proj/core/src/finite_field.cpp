#include "polarmap/finite_field.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "polarmap/elimination.hpp"
#include "polarmap/error.hpp"

namespace polarmap {

namespace {

using Matrix3 = std::array<std::array<Scalar, 3>, 3>;

std::uint64_t modulus_of(const TernaryForm& f) {
  if (f.field().is_rational()) throw FieldMismatch("expected a form over a prime field");
  return f.field().modulus();
}

std::uint64_t horner(std::span<const std::uint64_t> coeffs, std::uint64_t t, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = fp::add(fp::mul(acc, t, p), *it, p);
  return acc;
}

/// Coefficients in x_var of f with the other two coordinates fixed.
std::vector<std::uint64_t> restrict_to_fiber(const TernaryForm& f, int var, int i, int j,
                                             std::uint64_t ri, std::uint64_t rj,
                                             std::uint64_t p) {
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(f.degree()) + 1, 0);
  for (const auto& [e, c] : f.terms()) {
    const std::uint64_t w = fp::mul(fp::mul(c.prime_value(), fp::pow(ri, e[i], p), p),
                                    fp::pow(rj, e[j], p), p);
    coeffs[e[var]] = fp::add(coeffs[e[var]], w, p);
  }
  return coeffs;
}

bool all_zero(const std::vector<std::uint64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

ProjPoint make_point(std::array<std::uint64_t, 3> c, std::uint64_t p) {
  return ProjPoint(Scalar::prime_element(c[0], p), Scalar::prime_element(c[1], p),
                   Scalar::prime_element(c[2], p));
}

void insert_point(std::map<std::array<std::uint64_t, 3>, ProjPoint>& out, const ProjPoint& pt) {
  out.emplace(point_key(pt), pt);
}

/// Common zeros of two coprime forms in the chart eliminating x_var.
std::vector<ProjPoint> zeros_in_chart(const TernaryForm& a, const TernaryForm& b, int var,
                                      std::uint64_t p) {
  const int i = var == 0 ? 1 : 0;
  const int j = var == 2 ? 1 : 2;
  const Resultant res = resultant_elim(a, b, var);
  if (res.value.is_zero()) throw Error("coprime forms with vanishing resultant");
  // Roots of the binary form R(x_i, x_j) on P^1(F_p): (1 : t) and (0 : 1).
  std::vector<std::uint64_t> in_t(static_cast<std::size_t>(res.value.degree()) + 1, 0);
  for (const auto& [e, c] : res.value.terms()) in_t[e[j]] = c.prime_value();
  std::vector<std::array<std::uint64_t, 2>> projections;
  for (std::uint64_t t : roots_mod_p(in_t, p)) projections.push_back({1, t});
  // R(0, 1) is the coefficient of x_j^deg.
  if (in_t.back() == 0) projections.push_back({0, 1});
  std::vector<ProjPoint> points;
  for (const auto& [ri, rj] : projections) {
    const auto ca = restrict_to_fiber(a, var, i, j, ri, rj, p);
    const auto cb = restrict_to_fiber(b, var, i, j, ri, rj, p);
    const auto& lead = all_zero(ca) ? cb : ca;
    const auto& other = all_zero(ca) ? ca : cb;
    for (std::uint64_t s : roots_mod_p(lead, p)) {
      if (horner(other, s, p) != 0) continue;
      std::array<std::uint64_t, 3> coords{};
      coords[i] = ri;
      coords[j] = rj;
      coords[var] = s;
      points.push_back(make_point(coords, p));
    }
  }
  return points;
}

std::vector<ProjPoint> zeros_of_coprime_pair(const TernaryForm& a, const TernaryForm& b) {
  const std::uint64_t p = modulus_of(a);
  for (int var : {2, 1, 0}) {
    const ProjPoint e = coordinate_point(var, a.field());
    if (!a.evaluate(e).is_zero() || !b.evaluate(e).is_zero()) return zeros_in_chart(a, b, var, p);
  }
  // All three coordinate points are common zeros: move them with a fixed
  // pseudo-random change of coordinates and map the zeros back.
  std::mt19937_64 rng(0x5eedULL + p);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix3 t;
    for (auto& row : t) {
      for (auto& c : row) c = Scalar::prime_element(dist(rng), p);
    }
    const Scalar det = t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) -
                       t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
                       t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
    if (det.is_zero()) continue;
    const TernaryForm ta = a.substitute_linear(t);
    const TernaryForm tb = b.substitute_linear(t);
    const ProjPoint e2 = coordinate_point(2, a.field());
    if (ta.evaluate(e2).is_zero() && tb.evaluate(e2).is_zero()) continue;
    std::vector<ProjPoint> points;
    for (const ProjPoint& q : zeros_in_chart(ta, tb, 2, p)) {
      std::array<Scalar, 3> image;
      for (int r = 0; r < 3; ++r) image[r] = t[r][0] * q[0] + t[r][1] * q[1] + t[r][2] * q[2];
      points.emplace_back(image);
    }
    return points;
  }
  throw DegenerateError("no usable elimination chart found");
}

}  // namespace

TernaryForm reduce_mod_p(const TernaryForm& f, std::uint64_t p) {
  const Field target = Field::prime(p);
  TernaryForm::Terms terms;
  for (const auto& [e, c] : f.terms()) {
    Scalar r = c.reduce_mod(p);
    if (!r.is_zero()) terms.emplace(e, std::move(r));
  }
  return TernaryForm::from_terms(std::move(terms), f.degree(), target);
}

ProjPoint reduce_mod_p(const ProjPoint& point, std::uint64_t p) {
  return ProjPoint(point[0].reduce_mod(p), point[1].reduce_mod(p), point[2].reduce_mod(p));
}

std::vector<std::uint64_t> roots_mod_p(std::span<const std::uint64_t> coeffs, std::uint64_t p) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t t = 0; t < p; ++t) {
    if (horner(coeffs, t, p) == 0) roots.push_back(t);
  }
  return roots;
}

std::vector<ProjPoint> sample_curve_points(const TernaryForm& f, int lines, std::uint64_t seed) {
  const std::uint64_t p = modulus_of(f);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  auto draw = [&]() {
    while (true) {
      std::array<std::uint64_t, 3> c{dist(rng), dist(rng), dist(rng)};
      if (c != std::array<std::uint64_t, 3>{0, 0, 0}) return make_point(c, p);
    }
  };
  std::map<std::array<std::uint64_t, 3>, ProjPoint> found;
  for (int n = 0; n < lines; ++n) {
    const ProjPoint a = draw();
    const ProjPoint b = draw();
    if (a == b) continue;
    try {
      for (const ProjPoint& pt : points_on_line(f, a, b)) insert_point(found, pt);
    } catch (const DegenerateError&) {
    }
  }
  std::vector<ProjPoint> points;
  for (auto& [key, pt] : found) points.push_back(pt);
  return points;
}

std::array<std::uint64_t, 3> point_key(const ProjPoint& point) {
  return {point[0].prime_value(), point[1].prime_value(), point[2].prime_value()};
}

ZeroSet common_zeros(std::span<const TernaryForm> forms) {
  std::vector<TernaryForm> live;
  for (const auto& f : forms) {
    modulus_of(f);
    if (f.is_zero()) continue;
    if (f.degree() == 0) return {};
    live.push_back(f);
  }
  ZeroSet out;
  if (live.size() <= 1) {
    out.positive_dimensional = true;
    return out;
  }
  const TernaryForm& a = live[0];
  const TernaryForm& b = live[1];
  const std::span<const TernaryForm> rest(live.begin() + 2, live.end());
  const TernaryForm g = form_gcd(a, b);
  std::map<std::array<std::uint64_t, 3>, ProjPoint> found;
  if (g.degree() > 0) {
    std::vector<TernaryForm> residual{exact_quotient(a, g), exact_quotient(b, g)};
    residual.insert(residual.end(), rest.begin(), rest.end());
    std::vector<TernaryForm> on_common{g};
    on_common.insert(on_common.end(), rest.begin(), rest.end());
    for (const auto& part : {common_zeros(residual), common_zeros(on_common)}) {
      out.positive_dimensional = out.positive_dimensional || part.positive_dimensional;
      for (const auto& pt : part.points) insert_point(found, pt);
    }
  } else {
    for (const ProjPoint& pt : zeros_of_coprime_pair(a, b)) {
      const bool on_rest = std::all_of(rest.begin(), rest.end(),
                                       [&](const TernaryForm& f) { return f.evaluate(pt).is_zero(); });
      if (on_rest) insert_point(found, pt);
    }
  }
  for (auto& [key, pt] : found) out.points.push_back(pt);
  return out;
}

std::vector<ProjPoint> points_on_line(const TernaryForm& f, const ProjPoint& a,
                                      const ProjPoint& b) {
  const std::uint64_t p = modulus_of(f);
  const Scalar zero = Scalar::zero(f.field());
  // x = s*a + t*b, written as a substitution in (x0, x1) = (s, t).
  const Matrix3 line{{{a[0], b[0], zero}, {a[1], b[1], zero}, {a[2], b[2], zero}}};
  const TernaryForm restricted = f.substitute_linear(line);
  if (restricted.is_zero()) throw DegenerateError("form vanishes on the whole line");
  std::vector<std::uint64_t> in_t(static_cast<std::size_t>(restricted.degree()) + 1, 0);
  for (const auto& [e, c] : restricted.terms()) in_t[e[1]] = c.prime_value();
  std::map<std::array<std::uint64_t, 3>, ProjPoint> found;
  auto add = [&](const Scalar& s, const Scalar& t) {
    insert_point(found, ProjPoint(s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2]));
  };
  for (std::uint64_t t : roots_mod_p(in_t, p)) add(Scalar::one(f.field()), Scalar::prime_element(t, p));
  if (in_t.back() == 0) add(zero, Scalar::one(f.field()));
  std::vector<ProjPoint> points;
  for (auto& [key, pt] : found) points.push_back(pt);
  return points;
}

}  // namespace polarmap
