#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "padiceq/padic.hpp"
#include "padiceq/rational.hpp"

namespace padiceq {

enum class BoundKind {
  padic_relative,
  padic_welch,
  ga_relative,
  ga_welch,
  classical_relative,
  classical_gerzon,
};

std::string_view to_string(BoundKind kind);
BoundKind parse_bound_kind(std::string_view text);
bool is_padic(BoundKind kind);

/// p-adic bounds compare absolute values; classical ones compare rationals.
using BoundValue = std::variant<PadicAbs, Rational>;

std::string to_string(const BoundValue& value, const Prime& p);

/// Which branch of a relative bound applies, by comparing |n| (times |a^2|
/// in the generalized form) against gamma^2.
enum class SubCase {
  none,
  small_n,   // |a^2 n| <  gamma^2: conclusion |n|^2 <= |d| gamma^2 / |a^2|
  large_n,   // |a^2 n| >  gamma^2: conclusion |n| <= |d|
  boundary,  // equality: both conclusions apply
};

std::string_view to_string(SubCase c);

struct BoundReport {
  BoundKind name = BoundKind::padic_relative;
  BoundValue lhs = PadicAbs::zero();
  BoundValue rhs = PadicAbs::zero();
  /// lhs <= rhs.
  bool holds = false;
  SubCase sub_case = SubCase::none;
  /// Whether the conclusion(s) of the applicable sub-case hold.
  std::optional<bool> sub_case_holds;
  /// Whether the bound's hypotheses were verified for the configuration
  /// the report was computed from. Parameter-only reports leave this true.
  bool hypotheses_verified = true;
  /// Classical relative bound: d(1 - g2)/(1 - d g2) when d g2 < 1.
  std::optional<Rational> implied_n_max;
  std::string note;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// |n|^2 <= |d| max(|n|, gamma^2).
BoundReport bound_padic_relative(std::uint64_t n, std::uint64_t d, const PadicAbs& gamma, const Prime& p);

/// |n|^2 <= |d| max(|n|, gamma^2 / |a^2|). Throws DomainError for a = 0.
BoundReport bound_ga_relative(std::uint64_t n, std::uint64_t d, const PadicAbs& gamma, const Rational& a,
                              const Prime& p);

/// n(1 - d g2) <= d(1 - g2) where g2 = gamma^2 in [0, 1].
BoundReport bound_classical_relative(std::uint64_t n, std::uint64_t d, const Rational& gamma_squared);

/// n <= d(d+1)/2 for real equiangular lines. Informational.
BoundReport bound_classical_gerzon(std::uint64_t n, std::uint64_t d);

/// Shared evaluation of |n|^2 <= |d| max(|n|, corr / |a^2|) for a given
/// maximal (or common) correlation corr.
BoundReport evaluate_relative_form(BoundKind kind, std::uint64_t n, std::uint64_t d, const PadicAbs& corr,
                                   const Rational& a, const Prime& p);

}  // namespace padiceq
