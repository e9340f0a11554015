#include "padiceq/rational.hpp"

#include <cctype>
#include <ostream>

#include "padiceq/errors.hpp"

namespace padiceq {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num = text;
  std::string_view den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + original + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw ParseError("malformed rational '" + original + "': zero denominator");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  mpq_class r = -value_;
  return Rational(std::move(r));
}

std::size_t Rational::hash() const {
  const std::size_t a = mpz_fdiv_ui(value_.get_num_mpz_t(), 1000000007UL);
  const std::size_t b = mpz_fdiv_ui(value_.get_den_mpz_t(), 998244353UL);
  return a * 1315423911u ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, unsigned exponent) {
  BigInt n;
  BigInt d;
  mpz_pow_ui(n.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return Rational(n, d);
}

}  // namespace padiceq
