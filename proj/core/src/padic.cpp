#include "padiceq/padic.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <sstream>

#include "padiceq/errors.hpp"

namespace padiceq {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

const BigInt& two_pow_64() {
  static const BigInt value = [] {
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, 64);
    return v;
  }();
  return value;
}

std::int64_t checked_neg(std::int64_t v) {
  if (v == std::numeric_limits<std::int64_t>::min()) throw LimitError("valuation exponent overflow");
  return -v;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw LimitError("absolute value exponent overflow");
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kBases) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set for every n < 2^64.
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(u64 p) : Prime(BigInt(std::to_string(p), 10)) {}

Prime::Prime(const BigInt& p) : value_(p) {
  if (p >= two_pow_64()) throw DomainError("unsupported prime size: " + p.get_str());
  if (p < 2 || !is_prime_u64(to_u64())) throw DomainError(p.get_str() + " is not prime");
}

Prime Prime::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("malformed prime '" + s + "'");
  }
  return Prime(BigInt(s, 10));
}

u64 Prime::to_u64() const {
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

std::int64_t Valuation::value() const {
  if (infinite_) throw DomainError("valuation of zero is infinite");
  return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.value_ <=> b.value_;
}

Valuation valuation(const BigInt& x, const Prime& p) {
  if (x == 0) return Valuation::infinity();
  BigInt rest;
  const auto count = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.value().get_mpz_t());
  return Valuation::finite(static_cast<std::int64_t>(count));
}

Valuation valuation(const Rational& x, const Prime& p) {
  if (x.is_zero()) return Valuation::infinity();
  // Canonical form: p divides at most one of numerator and denominator.
  const auto num = valuation(x.numerator(), p).value();
  const auto den = valuation(x.denominator(), p).value();
  return Valuation::finite(num - den);
}

std::int64_t PadicAbs::exponent() const {
  if (zero_) throw DomainError("exponent of zero absolute value");
  return exponent_;
}

PadicAbs operator*(const PadicAbs& a, const PadicAbs& b) {
  if (a.zero_ || b.zero_) return PadicAbs::zero();
  return PadicAbs::pow(checked_add(a.exponent_, b.exponent_));
}

PadicAbs operator/(const PadicAbs& a, const PadicAbs& b) {
  if (b.zero_) throw DomainError("division by zero absolute value");
  if (a.zero_) return PadicAbs::zero();
  return PadicAbs::pow(checked_add(a.exponent_, checked_neg(b.exponent_)));
}

std::strong_ordering operator<=>(const PadicAbs& a, const PadicAbs& b) {
  if (a.zero_ || b.zero_) return b.zero_ <=> a.zero_;
  return a.exponent_ <=> b.exponent_;
}

std::string PadicAbs::to_string(const Prime& p) const {
  if (zero_) return "0";
  return p.to_string() + "^" + std::to_string(exponent_);
}

PadicAbs PadicAbs::parse(std::string_view text, const Prime& p) {
  const std::string original(text);
  if (text == "0") return zero();
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    throw ParseError("malformed absolute value '" + original + "' (expected \"0\" or \"p^e\")");
  }
  const std::string base(text.substr(0, caret));
  const std::string_view exp_text = text.substr(caret + 1);
  if (base.empty() || !std::all_of(base.begin(), base.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("malformed absolute value '" + original + "'");
  }
  if (BigInt(base, 10) != p.value()) {
    throw ParseError("absolute value '" + original + "' uses base " + base + " but p = " + p.to_string());
  }
  std::int64_t e = 0;
  const char* first = exp_text.data();
  const char* last = exp_text.data() + exp_text.size();
  auto [ptr, ec] = std::from_chars(first, last, e);
  if (exp_text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("malformed exponent in absolute value '" + original + "'");
  }
  return pow(e);
}

PadicAbs abs_p(const Rational& x, const Prime& p) {
  const Valuation v = valuation(x, p);
  if (v.is_infinite()) return PadicAbs::zero();
  return PadicAbs::pow(checked_neg(v.value()));
}

PadicAbs abs_max(std::span<const PadicAbs> values) {
  if (values.empty()) throw DomainError("empty-max");
  return *std::max_element(values.begin(), values.end());
}

PadicAbs max(const PadicAbs& a, const PadicAbs& b) { return a < b ? b : a; }

std::vector<BigInt> base_p_digits(const BigInt& residue, const Prime& p, int digits) {
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(std::max(digits, 0)));
  BigInt rest = residue;
  BigInt modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p.value().get_mpz_t(), static_cast<unsigned long>(std::max(digits, 0)));
  mpz_fdiv_r(rest.get_mpz_t(), rest.get_mpz_t(), modulus.get_mpz_t());
  for (int i = 0; i < digits; ++i) {
    BigInt q;
    BigInt r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), p.value().get_mpz_t());
    out.push_back(r);
    rest = q;
  }
  return out;
}

std::string padic_expansion(const Rational& x, const Prime& p, int digits) {
  if (x.is_zero()) return "0";
  if (digits < 1) throw DomainError("padic_expansion needs at least one digit");
  const std::int64_t v = valuation(x, p).value();
  // Unit part u = x / p^v, then u mod p^digits = num * den^{-1}.
  BigInt num = x.numerator();
  BigInt den = x.denominator();
  BigInt pv;
  mpz_pow_ui(pv.get_mpz_t(), p.value().get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
  if (v > 0) mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pv.get_mpz_t());
  if (v < 0) mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), pv.get_mpz_t());
  BigInt modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p.value().get_mpz_t(), static_cast<unsigned long>(digits));
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  BigInt unit = num * inv;
  mpz_fdiv_r(unit.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());

  const auto ds = base_p_digits(unit, p, digits);
  std::ostringstream os;
  if (v != 0) os << p.to_string() << "^" << v << " * ";
  os << "(";
  bool first = true;
  for (int i = 0; i < digits; ++i) {
    if (ds[static_cast<std::size_t>(i)] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << ds[static_cast<std::size_t>(i)].get_str();
    if (i == 1) os << "*" << p.to_string();
    if (i > 1) os << "*" << p.to_string() << "^" << i;
  }
  if (!first) os << " + ";
  os << "O(" << p.to_string() << "^" << digits << "))";
  return os.str();
}

}  // namespace padiceq
