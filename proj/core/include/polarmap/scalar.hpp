#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace polarmap {

class Scalar;

/// Coefficient field tag: the rationals, or a prime field F_p with p an odd
/// prime below 2^32.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws DomainError unless p is an odd prime below 2^32.
  static Field prime(std::uint64_t p);

  constexpr bool is_rational() const { return modulus_ == 0; }
  constexpr std::uint64_t modulus() const { return modulus_; }
  std::string name() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  friend class Scalar;
  explicit constexpr Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

bool is_odd_prime(std::uint64_t p);

/// An exact scalar: an arbitrary-precision rational in lowest terms, or a
/// canonical representative in [0, p) of F_p. Arithmetic across fields throws
/// FieldMismatch.
class Scalar {
 public:
  Scalar() : rep_(mpq_class(0)) {}
  Scalar(int value) : rep_(mpq_class(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long value) : rep_(mpq_class(value)) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class value);

  static Scalar rational(long numerator, long denominator);
  /// Parses "123", "-4", "7/3". Throws DomainError on malformed text.
  static Scalar parse(std::string_view text);
  /// The integer `value` as an element of `field`.
  static Scalar integer(long value, Field field);
  static Scalar zero(Field field) { return integer(0, field); }
  static Scalar one(Field field) { return integer(1, field); }
  static Scalar prime_element(std::uint64_t value, std::uint64_t p);

  Field field() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }
  bool is_zero() const;
  bool is_one() const;

  /// Only valid for rational scalars.
  const mpq_class& rational_value() const;
  /// Only valid for prime-field scalars.
  std::uint64_t prime_value() const;
  /// Sign of a rational scalar; prime-field scalars report 0 or 1.
  int sign() const;

  Scalar inverse() const;
  Scalar pow(unsigned exponent) const;

  /// Coefficientwise image in F_p. Throws ReductionError when the denominator
  /// is divisible by p.
  Scalar reduce_mod(std::uint64_t p) const;

  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

 private:
  struct PrimeElement {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  explicit Scalar(PrimeElement e) : rep_(e) {}
  void check_same_field(const Scalar& rhs) const;

  std::variant<mpq_class, PrimeElement> rep_;
};

namespace fp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t p);
/// Requires a != 0 mod p.
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);
/// Maps a signed integer to its canonical representative.
std::uint64_t from_signed(long long value, std::uint64_t p);

}  // namespace fp

}  // namespace polarmap
