#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "padiceq/rational.hpp"

namespace padiceq {

/// A rational prime below 2^64, checked with a deterministic Miller-Rabin test.
class Prime {
 public:
  explicit Prime(std::uint64_t p);
  /// Throws DomainError for composites and "unsupported prime size" for p >= 2^64.
  explicit Prime(const BigInt& p);
  static Prime parse(std::string_view text);

  const BigInt& value() const { return value_; }
  std::uint64_t to_u64() const;
  std::string to_string() const { return value_.get_str(); }

  friend bool operator==(const Prime& a, const Prime& b) { return a.value_ == b.value_; }

 private:
  BigInt value_;
};

bool is_prime_u64(std::uint64_t n);

/// v_p(x), with +infinity for x = 0.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(true, 0); }
  static Valuation finite(std::int64_t v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  /// Throws DomainError when infinite.
  std::int64_t value() const;
  std::string to_string() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

 private:
  Valuation(bool infinite, std::int64_t v) : infinite_(infinite), value_(v) {}
  bool infinite_;
  std::int64_t value_;
};

Valuation valuation(const BigInt& x, const Prime& p);
Valuation valuation(const Rational& x, const Prime& p);

/// The exact p-adic absolute value |x|_p: either zero or p^e with e = -v_p(x).
/// Only the exponent is stored; p is carried by the context.
class PadicAbs {
 public:
  static PadicAbs zero() { return PadicAbs(true, 0); }
  static PadicAbs pow(std::int64_t exponent) { return PadicAbs(false, exponent); }
  static PadicAbs one() { return pow(0); }

  bool is_zero() const { return zero_; }
  /// Throws DomainError on Zero.
  std::int64_t exponent() const;

  PadicAbs squared() const { return *this * *this; }

  friend PadicAbs operator*(const PadicAbs& a, const PadicAbs& b);
  /// Division by Zero throws DomainError.
  friend PadicAbs operator/(const PadicAbs& a, const PadicAbs& b);

  friend bool operator==(const PadicAbs&, const PadicAbs&) = default;
  friend std::strong_ordering operator<=>(const PadicAbs& a, const PadicAbs& b);

  /// "0" or "p^e", e.g. "5^-2".
  std::string to_string(const Prime& p) const;
  /// Inverse of to_string; the base must equal p.
  static PadicAbs parse(std::string_view text, const Prime& p);

 private:
  PadicAbs(bool zero, std::int64_t e) : zero_(zero), exponent_(e) {}
  bool zero_;
  std::int64_t exponent_;
};

PadicAbs abs_p(const Rational& x, const Prime& p);

/// Maximum under the PadicAbs order; throws DomainError("empty-max") on an empty list.
PadicAbs abs_max(std::span<const PadicAbs> values);
PadicAbs max(const PadicAbs& a, const PadicAbs& b);

/// Display-only truncated expansion p^v * (d_0 + d_1 p + ... + O(p^k)),
/// digits taken from the unit part of x.
std::string padic_expansion(const Rational& x, const Prime& p, int digits);

/// Digits 0..p-1, lowest first, of the p-adic integer represented by
/// `residue` (interpreted modulo p^digits).
std::vector<BigInt> base_p_digits(const BigInt& residue, const Prime& p, int digits);

}  // namespace padiceq
