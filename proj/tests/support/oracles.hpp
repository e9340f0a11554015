#pragma once

// Brute-force reference implementations used only by the tests. None of
// them shares code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "padiceq/linalg.hpp"
#include "padiceq/polynomial.hpp"

namespace padiceq::oracle {

/// v_p of a nonzero integer by repeated division.
inline std::int64_t int_valuation(BigInt n, unsigned long p) {
  std::int64_t v = 0;
  n = abs(n);
  while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    n /= p;
    ++v;
  }
  return v;
}

inline std::int64_t rational_valuation(const Rational& x, unsigned long p) {
  return int_valuation(x.numerator(), p) - int_valuation(x.denominator(), p);
}

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

/// det(xI - M) by Laplace expansion along the first row, with polynomial entries.
inline Polynomial cofactor_char_poly(const Matrix& m) {
  const std::size_t n = m.rows();
  using PolyMatrix = std::vector<std::vector<Polynomial>>;
  PolyMatrix a(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = i == j ? Polynomial{-m(i, j), Rational(1)} : Polynomial{-m(i, j)};
    }
  }
  std::function<Polynomial(const PolyMatrix&)> det = [&](const PolyMatrix& x) -> Polynomial {
    const std::size_t k = x.size();
    if (k == 1) return x[0][0];
    Polynomial acc;
    for (std::size_t c = 0; c < k; ++c) {
      PolyMatrix minor;
      for (std::size_t r = 1; r < k; ++r) {
        std::vector<Polynomial> row;
        for (std::size_t cc = 0; cc < k; ++cc) {
          if (cc != c) row.push_back(x[r][cc]);
        }
        minor.push_back(std::move(row));
      }
      const Polynomial term = x[0][c] * det(minor);
      acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  return det(a);
}

inline Matrix matrix_power(const Matrix& m, unsigned k) {
  Matrix r = Matrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

/// Lower convex hull of (i, v_i) evaluated at integer abscissa x: the
/// minimum over all chords through points on either side of x.
inline Rational lower_hull_at(const std::vector<std::pair<long, std::int64_t>>& pts, long x) {
  Rational best;
  bool have = false;
  for (const auto& [xa, ya] : pts) {
    for (const auto& [xb, yb] : pts) {
      if (xa > x || xb < x) continue;
      Rational val;
      if (xa == xb) {
        val = Rational(static_cast<long>(ya));
      } else {
        val = Rational(static_cast<long>(ya)) +
              Rational(BigInt(static_cast<long>(yb - ya)), BigInt(xb - xa)) * Rational(x - xa);
      }
      if (!have || val < best) {
        best = val;
        have = true;
      }
    }
  }
  return best;
}

/// All cliques of an adjacency matrix by subset enumeration (n <= 20).
inline std::vector<std::vector<std::size_t>> all_cliques_by_subsets(const std::vector<std::vector<char>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) members.push_back(i);
    }
    bool ok = true;
    for (std::size_t a = 0; a < members.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < members.size() && ok; ++b) ok = adj[members[a]][members[b]] != 0;
    }
    if (ok) out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace padiceq::oracle
