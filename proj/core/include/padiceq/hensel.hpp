#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padiceq/padic.hpp"
#include "padiceq/polynomial.hpp"

namespace padiceq {

/// A root of a rational polynomial in Q_p, known to finite precision:
/// root = p^shift * y with y in Z_p and y = residue (mod p^precision).
/// A nonzero residue is a unit, so shift is then the valuation of the root.
struct PadicRoot {
  std::int64_t shift = 0;
  BigInt residue;
  int precision = 0;

  /// Exact when the residue is nonzero modulo p^precision; otherwise only a
  /// lower bound (reported as shift + precision).
  std::int64_t valuation(const Prime& p) const;
  std::string to_string(const Prime& p) const;
};

struct PadicRootSearch {
  std::vector<PadicRoot> roots;
  /// True when the search was exhaustive: `roots` is then the full set of
  /// roots of f in Q_p (each to `precision` digits).
  bool complete = false;
};

inline constexpr int kDefaultHenselPrecision = 64;
/// Residues mod p are enumerated directly, so primes above this are skipped.
inline constexpr std::uint64_t kMaxHenselPrime = 65536;

/// Finds the roots in Q_p of a squarefree polynomial with f(0) != 0 by
/// refining residues digit by digit and Hensel-lifting simple roots.
/// Throws DomainError if f is zero, not squarefree, or has a zero root.
PadicRootSearch find_padic_roots(const Polynomial& f, const Prime& p, int precision = kDefaultHenselPrecision);

}  // namespace padiceq
