#include "polarmap/form.hpp"

#include <sstream>

#include "polarmap/error.hpp"

namespace polarmap {

std::vector<Exponents> monomials_of_degree(int degree) {
  std::vector<Exponents> result;
  if (degree < 0) return result;
  // Descending grevlex: e2 ascending, then e1 ascending.
  for (int e2 = 0; e2 <= degree; ++e2) {
    for (int e1 = 0; e1 + e2 <= degree; ++e1) {
      result.push_back({degree - e1 - e2, e1, e2});
    }
  }
  return result;
}

namespace {

void check_field(const TernaryForm& a, const TernaryForm& b) {
  if (a.field() != b.field()) {
    throw FieldMismatch("form field mismatch: " + a.field().name() + " vs " + b.field().name());
  }
}

void accumulate(TernaryForm::Terms& terms, const Exponents& e, const Scalar& c) {
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  } else if (c.is_zero()) {
    terms.erase(it);
  }
}

}  // namespace

TernaryForm::TernaryForm(int degree, Field field) : degree_(degree), field_(field) {}

TernaryForm::TernaryForm(Terms terms, int degree, Field field)
    : terms_(std::move(terms)), degree_(degree), field_(field) {}

TernaryForm TernaryForm::from_terms(Terms terms, Field field) {
  const int degree = terms.empty() ? 0 : total_degree(terms.begin()->first);
  return from_terms(std::move(terms), degree, field);
}

TernaryForm TernaryForm::from_terms(Terms terms, int degree, Field field) {
  for (auto it = terms.begin(); it != terms.end();) {
    const Exponents& e = it->first;
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw DomainError("negative exponent");
    if (total_degree(e) != degree) throw NonHomogeneousError(degree, total_degree(e));
    if (it->second.field() != field) throw FieldMismatch("coefficient outside " + field.name());
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  }
  return TernaryForm(std::move(terms), degree, field);
}

TernaryForm TernaryForm::from_terms_unchecked(Terms terms, int degree, Field field) {
  return TernaryForm(std::move(terms), degree, field);
}

TernaryForm TernaryForm::monomial(const Exponents& e, const Scalar& coefficient) {
  Terms terms;
  terms.emplace(e, coefficient);
  return from_terms(std::move(terms), total_degree(e), coefficient.field());
}

TernaryForm TernaryForm::variable(int index, Field field) {
  Exponents e{0, 0, 0};
  e.at(static_cast<std::size_t>(index)) = 1;
  return monomial(e, Scalar::one(field));
}

TernaryForm TernaryForm::constant(const Scalar& value) { return monomial({0, 0, 0}, value); }

TernaryForm TernaryForm::linear(const std::array<Scalar, 3>& coefficients) {
  Terms terms;
  for (int i = 0; i < 3; ++i) {
    Exponents e{0, 0, 0};
    e[i] = 1;
    terms.emplace(e, coefficients[i]);
  }
  return from_terms(std::move(terms), 1, coefficients[0].field());
}

Scalar TernaryForm::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

const Exponents& TernaryForm::leading_monomial() const {
  if (is_zero()) throw DomainError("leading monomial of the zero form");
  return terms_.begin()->first;
}

const Scalar& TernaryForm::leading_coefficient() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero form");
  return terms_.begin()->second;
}

int TernaryForm::degree_in(int var) const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
  return best;
}

bool TernaryForm::is_homogeneous() const {
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) != degree_) return false;
  }
  return true;
}

Scalar TernaryForm::evaluate(std::span<const Scalar, 3> point) const {
  for (const auto& c : point) {
    if (c.field() != field_) throw FieldMismatch("point outside " + field_.name());
  }
  // Cache powers per variable; degrees here are small.
  std::array<std::vector<Scalar>, 3> powers;
  int top = 0;
  for (const auto& [e, c] : terms_) top = std::max({top, e[0], e[1], e[2]});
  for (int v = 0; v < 3; ++v) {
    powers[v].reserve(static_cast<std::size_t>(top) + 1);
    powers[v].push_back(Scalar::one(field_));
    for (int k = 1; k <= top; ++k) powers[v].push_back(powers[v].back() * point[v]);
  }
  Scalar sum = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    sum += c * powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
  }
  return sum;
}

Scalar TernaryForm::evaluate(const ProjPoint& point) const {
  return evaluate(std::span<const Scalar, 3>(point.coords()));
}

TernaryForm TernaryForm::derivative(int var) const {
  Terms terms;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents lowered = e;
    lowered[var] -= 1;
    accumulate(terms, lowered, c * Scalar::integer(e[var], field_));
  }
  return TernaryForm(std::move(terms), std::max(degree_ - 1, 0), field_);
}

TernaryForm TernaryForm::scaled(const Scalar& factor) const {
  if (factor.field() != field_) throw FieldMismatch("scalar outside " + field_.name());
  if (factor.is_zero()) return TernaryForm(degree_, field_);
  Terms terms;
  for (const auto& [e, c] : terms_) terms.emplace_hint(terms.end(), e, c * factor);
  return TernaryForm(std::move(terms), degree_, field_);
}

TernaryForm TernaryForm::pow(unsigned exponent) const {
  TernaryForm result = constant(Scalar::one(field_));
  TernaryForm base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

TernaryForm TernaryForm::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

TernaryForm TernaryForm::substitute(const std::array<TernaryForm, 3>& images) const {
  int image_degree = -1;
  for (const auto& g : images) {
    if (g.field() != field_) throw FieldMismatch("substitution image outside " + field_.name());
    if (!g.is_zero()) {
      if (image_degree >= 0 && g.degree() != image_degree) {
        throw DegreeMismatch("substitution images must share one degree");
      }
      image_degree = g.degree();
    }
  }
  if (image_degree < 0) image_degree = images[0].degree();
  std::array<std::vector<TernaryForm>, 3> powers;
  int top = 0;
  for (const auto& [e, c] : terms_) top = std::max({top, e[0], e[1], e[2]});
  for (int v = 0; v < 3; ++v) {
    powers[v].push_back(constant(Scalar::one(field_)));
    for (int k = 1; k <= top; ++k) powers[v].push_back(powers[v].back() * images[v]);
  }
  TernaryForm result(degree_ * image_degree, field_);
  for (const auto& [e, c] : terms_) {
    result = result + (powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]).scaled(c);
  }
  return result;
}

TernaryForm TernaryForm::substitute_linear(
    const std::array<std::array<Scalar, 3>, 3>& matrix) const {
  std::array<TernaryForm, 3> images;
  for (int i = 0; i < 3; ++i) images[i] = linear(matrix[i]);
  return substitute(images);
}

TernaryForm TernaryForm::coefficient_in(int var, int k) const {
  Terms terms;
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponents rest = e;
    rest[var] = 0;
    terms.emplace(rest, c);
  }
  return TernaryForm(std::move(terms), degree_ - k, field_);
}

std::string TernaryForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant_term = total_degree(e) == 0;
    bool need_star = false;
    if (coeff != "1" || constant_term) {
      out << coeff;
      need_star = true;
    }
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (need_star) out << '*';
      out << 'x' << v;
      if (e[v] > 1) out << '^' << e[v];
      need_star = true;
    }
  }
  return out.str();
}

TernaryForm TernaryForm::operator-() const { return scaled(-Scalar::one(field_)); }

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
  check_field(a, b);
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("adding forms of degree " + std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  }
  TernaryForm::Terms terms = a.terms_;
  for (const auto& [e, c] : b.terms_) accumulate(terms, e, c);
  return TernaryForm(std::move(terms), a.degree(), a.field());
}

TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) { return a + (-b); }

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  check_field(a, b);
  TernaryForm::Terms terms;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      accumulate(terms, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return TernaryForm(std::move(terms), a.degree() + b.degree(), a.field());
}

bool operator==(const TernaryForm& a, const TernaryForm& b) {
  return a.field_ == b.field_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

ProjPoint::ProjPoint(const Scalar& c0, const Scalar& c1, const Scalar& c2)
    : ProjPoint(std::array<Scalar, 3>{c0, c1, c2}) {}

ProjPoint::ProjPoint(const std::array<Scalar, 3>& coords) : coords_(coords) {
  const Field field = coords_[0].field();
  if (coords_[1].field() != field || coords_[2].field() != field) {
    throw FieldMismatch("point coordinates from different fields");
  }
  int pivot = -1;
  for (int i = 0; i < 3; ++i) {
    if (!coords_[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) throw DomainError("(0:0:0) is not a projective point");
  const Scalar scale = coords_[pivot].inverse();
  for (auto& c : coords_) c *= scale;
}

int ProjPoint::pivot() const {
  for (int i = 0; i < 3; ++i) {
    if (!coords_[i].is_zero()) return i;
  }
  return -1;  // unreachable: constructor rejects the zero vector
}

std::string ProjPoint::to_string() const {
  return "(" + coords_[0].to_string() + ":" + coords_[1].to_string() + ":" +
         coords_[2].to_string() + ")";
}

ProjPoint parse_point(const std::string& text) {
  std::array<Scalar, 3> coords;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t end = text.find_first_of(":,", start);
    if ((i < 2) == (end == std::string::npos)) {
      throw DomainError("point '" + text + "' must have exactly three coordinates");
    }
    std::string item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::erase_if(item, [](char ch) { return ch == ' ' || ch == '(' || ch == ')'; });
    coords[i] = Scalar::parse(item);
    start = end + 1;
  }
  return ProjPoint(coords);
}

ProjPoint coordinate_point(int index, Field field) {
  std::array<Scalar, 3> coords{Scalar::zero(field), Scalar::zero(field), Scalar::zero(field)};
  coords.at(static_cast<std::size_t>(index)) = Scalar::one(field);
  return ProjPoint(coords);
}

}  // namespace polarmap
