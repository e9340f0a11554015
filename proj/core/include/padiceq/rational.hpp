#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace padiceq {

using BigInt = mpz_class;

/// Exact rational number, always kept in canonical form
/// (positive denominator, numerator and denominator coprime).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(mpq_class value);

  /// Parses "num/den" or "num" in base 10; an optional minus sign may
  /// precede the numerator only. Non-canonical input such as "6/4" is
  /// accepted and reduced.
  static Rational parse(std::string_view text);

  /// Canonical "num/den", or "num" when the denominator is 1.
  std::string to_string() const;

  const BigInt& numerator() const { return value_.get_num(); }
  const BigInt& denominator() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  Rational inverse() const;
  Rational abs() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Integer power with a non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace padiceq

template <>
struct std::hash<padiceq::Rational> {
  std::size_t operator()(const padiceq::Rational& r) const noexcept { return r.hash(); }
};
