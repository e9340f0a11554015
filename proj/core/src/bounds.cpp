#include "padiceq/bounds.hpp"

#include <array>
#include <utility>

#include "padiceq/errors.hpp"

namespace padiceq {

namespace {

constexpr std::array<std::pair<BoundKind, std::string_view>, 6> kBoundNames{{
    {BoundKind::padic_relative, "padic-relative"},
    {BoundKind::padic_welch, "padic-welch"},
    {BoundKind::ga_relative, "ga-relative"},
    {BoundKind::ga_welch, "ga-welch"},
    {BoundKind::classical_relative, "classical-relative"},
    {BoundKind::classical_gerzon, "classical-gerzon"},
}};

Rational from_u64(std::uint64_t v) { return Rational(BigInt(std::to_string(v), 10)); }

}  // namespace

std::string_view to_string(BoundKind kind) {
  for (const auto& [k, name] : kBoundNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

BoundKind parse_bound_kind(std::string_view text) {
  for (const auto& [k, name] : kBoundNames) {
    if (name == text) return k;
  }
  throw ParseError("unknown bound name '" + std::string(text) + "'");
}

bool is_padic(BoundKind kind) {
  return kind == BoundKind::padic_relative || kind == BoundKind::padic_welch || kind == BoundKind::ga_relative ||
         kind == BoundKind::ga_welch;
}

std::string to_string(const BoundValue& value, const Prime& p) {
  if (const auto* abs = std::get_if<PadicAbs>(&value)) return abs->to_string(p);
  return std::get<Rational>(value).to_string();
}

std::string_view to_string(SubCase c) {
  switch (c) {
    case SubCase::small_n:
      return "small-n";
    case SubCase::large_n:
      return "large-n";
    case SubCase::boundary:
      return "boundary";
    case SubCase::none:
      break;
  }
  return "none";
}

BoundReport evaluate_relative_form(BoundKind kind, std::uint64_t n, std::uint64_t d, const PadicAbs& corr,
                                   const Rational& a, const Prime& p) {
  if (a.is_zero()) throw DomainError("a must be nonzero");
  const PadicAbs abs_n = abs_p(from_u64(n), p);
  const PadicAbs abs_d = abs_p(from_u64(d), p);
  const PadicAbs abs_a2 = abs_p(a * a, p);
  const PadicAbs corr2 = corr.squared();
  const PadicAbs term = corr2 / abs_a2;

  BoundReport r;
  r.name = kind;
  r.lhs = abs_n.squared();
  r.rhs = abs_d * max(abs_n, term);
  r.holds = std::get<PadicAbs>(r.lhs) <= std::get<PadicAbs>(r.rhs);

  const bool small_holds = abs_n.squared() <= abs_d * term;
  const bool large_holds = abs_n <= abs_d;
  const PadicAbs weighted_n = abs_a2 * abs_n;
  if (weighted_n < corr2) {
    r.sub_case = SubCase::small_n;
    r.sub_case_holds = small_holds;
  } else if (weighted_n > corr2) {
    r.sub_case = SubCase::large_n;
    r.sub_case_holds = large_holds;
  } else {
    r.sub_case = SubCase::boundary;
    r.sub_case_holds = small_holds && large_holds;
  }
  return r;
}

BoundReport bound_padic_relative(std::uint64_t n, std::uint64_t d, const PadicAbs& gamma, const Prime& p) {
  return evaluate_relative_form(BoundKind::padic_relative, n, d, gamma, Rational(1), p);
}

BoundReport bound_ga_relative(std::uint64_t n, std::uint64_t d, const PadicAbs& gamma, const Rational& a,
                              const Prime& p) {
  return evaluate_relative_form(BoundKind::ga_relative, n, d, gamma, a, p);
}

BoundReport bound_classical_relative(std::uint64_t n, std::uint64_t d, const Rational& gamma_squared) {
  if (gamma_squared < Rational(0) || gamma_squared > Rational(1)) {
    throw DomainError("gamma^2 must lie in [0, 1], got " + gamma_squared.to_string());
  }
  const Rational rn = from_u64(n);
  const Rational rd = from_u64(d);
  BoundReport r;
  r.name = BoundKind::classical_relative;
  r.lhs = rn * (Rational(1) - rd * gamma_squared);
  r.rhs = rd * (Rational(1) - gamma_squared);
  r.holds = std::get<Rational>(r.lhs) <= std::get<Rational>(r.rhs);
  const Rational denom = Rational(1) - rd * gamma_squared;
  if (denom > Rational(0)) {
    r.implied_n_max = rd * (Rational(1) - gamma_squared) / denom;
  } else {
    r.note = "d*gamma^2 >= 1: bound places no restriction on n";
  }
  return r;
}

BoundReport bound_classical_gerzon(std::uint64_t n, std::uint64_t d) {
  const Rational rd = from_u64(d);
  BoundReport r;
  r.name = BoundKind::classical_gerzon;
  r.lhs = from_u64(n);
  r.rhs = rd * (rd + Rational(1)) / Rational(2);
  r.holds = std::get<Rational>(r.lhs) <= std::get<Rational>(r.rhs);
  r.note = "informational: real equiangular lines only";
  return r;
}

}  // namespace padiceq
