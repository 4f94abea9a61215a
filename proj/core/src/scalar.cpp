#include "polarmap/scalar.hpp"

#include <cctype>
#include <limits>

#include "polarmap/error.hpp"

namespace polarmap {

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t k = 3; k * k <= p; k += 2) {
    if (p % k == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_odd_prime(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not an odd prime below 2^32");
  }
  return Field{p};
}

std::string Field::name() const {
  return is_rational() ? std::string("QQ") : "GF(" + std::to_string(modulus_) + ")";
}

namespace fp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  // p is prime, so Fermat suffices.
  return pow(a, p - 2, p);
}

std::uint64_t from_signed(long long value, std::uint64_t p) {
  const auto modulus = static_cast<long long>(p);
  long long r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<std::uint64_t>(r);
}

}  // namespace fp

Scalar::Scalar(mpq_class value) : rep_(std::move(value)) {
  std::get<mpq_class>(rep_).canonicalize();
}

Scalar Scalar::rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  return Scalar(mpq_class(numerator, denominator));
}

Scalar Scalar::parse(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer(num) || !is_integer(den)) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  std::string d(den);
  if (!d.empty() && d[0] == '+') d.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(d, 10);
  if (zd == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Scalar(mpq_class(zn, zd));
}

Scalar Scalar::integer(long value, Field field) {
  if (field.is_rational()) return Scalar(value);
  return Scalar(PrimeElement{fp::from_signed(value, field.modulus()), field.modulus()});
}

Scalar Scalar::prime_element(std::uint64_t value, std::uint64_t p) {
  return Scalar(PrimeElement{value % p, p});
}

Field Scalar::field() const {
  if (const auto* e = std::get_if<PrimeElement>(&rep_)) return Field{e->modulus};
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return sgn(*q) == 0;
  return std::get<PrimeElement>(rep_).value == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q == 1;
  return std::get<PrimeElement>(rep_).value == 1;
}

const mpq_class& Scalar::rational_value() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q;
  throw FieldMismatch("rational value requested from a prime-field scalar");
}

std::uint64_t Scalar::prime_value() const {
  if (const auto* e = std::get_if<PrimeElement>(&rep_)) return e->value;
  throw FieldMismatch("prime-field value requested from a rational scalar");
}

int Scalar::sign() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return sgn(*q);
  return std::get<PrimeElement>(rep_).value == 0 ? 0 : 1;
}

void Scalar::check_same_field(const Scalar& rhs) const {
  const auto* a = std::get_if<PrimeElement>(&rep_);
  const auto* b = std::get_if<PrimeElement>(&rhs.rep_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->modulus != b->modulus)) {
    throw FieldMismatch("scalar field mismatch: " + field().name() + " vs " + rhs.field().name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return Scalar(mpq_class(1) / *q);
  const auto& e = std::get<PrimeElement>(rep_);
  return Scalar(PrimeElement{fp::inverse(e.value, e.modulus), e.modulus});
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = Scalar::one(field());
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

Scalar Scalar::reduce_mod(std::uint64_t p) const {
  if (const auto* e = std::get_if<PrimeElement>(&rep_)) {
    if (e->modulus != p) throw FieldMismatch("cannot reduce an element of " + field().name());
    return *this;
  }
  const auto& q = std::get<mpq_class>(rep_);
  const mpz_class modulus(static_cast<unsigned long>(p));
  mpz_class den = q.get_den() % modulus;
  if (den == 0) {
    throw ReductionError("coefficient " + q.get_str() + " has a denominator divisible by " +
                         std::to_string(p));
  }
  mpz_class num = q.get_num() % modulus;
  if (num < 0) num += modulus;
  const std::uint64_t n = num.get_ui();
  const std::uint64_t d = den.get_ui();
  return Scalar(PrimeElement{fp::mul(n, fp::inverse(d, p), p), p});
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return q->get_str();
  return std::to_string(std::get<PrimeElement>(rep_).value);
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return Scalar(mpq_class(-*q));
  const auto& e = std::get<PrimeElement>(rep_);
  return Scalar(PrimeElement{e.value == 0 ? 0 : e.modulus - e.value, e.modulus});
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&rep_)) {
    *q += std::get<mpq_class>(rhs.rep_);
  } else {
    auto& e = std::get<PrimeElement>(rep_);
    e.value = fp::add(e.value, std::get<PrimeElement>(rhs.rep_).value, e.modulus);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&rep_)) {
    *q -= std::get<mpq_class>(rhs.rep_);
  } else {
    auto& e = std::get<PrimeElement>(rep_);
    e.value = fp::sub(e.value, std::get<PrimeElement>(rhs.rep_).value, e.modulus);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&rep_)) {
    *q *= std::get<mpq_class>(rhs.rep_);
  } else {
    auto& e = std::get<PrimeElement>(rep_);
    e.value = fp::mul(e.value, std::get<PrimeElement>(rhs.rep_).value, e.modulus);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  if (rhs.is_zero()) throw DomainError("division by zero");
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  const auto* a = std::get_if<Scalar::PrimeElement>(&lhs.rep_);
  const auto* b = std::get_if<Scalar::PrimeElement>(&rhs.rep_);
  if (a == nullptr && b == nullptr) {
    return std::get<mpq_class>(lhs.rep_) == std::get<mpq_class>(rhs.rep_);
  }
  if (a != nullptr && b != nullptr) return a->modulus == b->modulus && a->value == b->value;
  return false;
}

}  // namespace polarmap
