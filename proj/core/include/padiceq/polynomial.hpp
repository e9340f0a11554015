#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "padiceq/linalg.hpp"
#include "padiceq/padic.hpp"
#include "padiceq/rational.hpp"

namespace padiceq {

/// Univariate polynomial over Q, coefficients lowest degree first.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// x - r
  static Polynomial linear_factor(const Rational& r);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  Matrix evaluate(const Matrix& m) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& f);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// e.g. "x^2 - 2x + 16/25"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a / b; b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// True iff gcd(f, f') is constant.
bool is_squarefree(const Polynomial& f);

/// f / gcd(f, f'), made monic.
Polynomial squarefree_part(const Polynomial& f);

/// Yun's decomposition f = lc * prod_i g_i^i with g_i monic, squarefree and
/// pairwise coprime. Returns (g_i, i) for the non-constant g_i.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);

inline constexpr std::size_t kDefaultCharPolyLimit = 64;

/// Monic det(xI - M) via Faddeev-LeVerrier. Throws DimensionError for a
/// non-square matrix and LimitError when the dimension exceeds `limit`.
Polynomial char_poly(const Matrix& m, std::size_t limit = kDefaultCharPolyLimit);

struct RationalRoot {
  Rational root;
  int multiplicity = 0;

  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// All rational roots with multiplicity, ascending. Candidates r/s come from
/// the divisors of the constant and leading coefficients of the primitive
/// integer form. Throws DomainError on the zero polynomial and LimitError if
/// a coefficient cannot be factored within the built-in effort bound.
std::vector<RationalRoot> rational_roots(const Polynomial& f);

struct NewtonSegment {
  /// Slope of the lower hull edge in the (i, v_p(c_i)) plane.
  Rational slope;
  /// Horizontal length: the number of roots of valuation -slope.
  int length = 0;

  Rational root_valuation() const { return -slope; }
  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

struct NewtonPolygon {
  /// Strictly increasing slopes.
  std::vector<NewtonSegment> segments;
  /// Roots equal to zero (valuation +infinity), i.e. the number of
  /// vanishing low-order coefficients.
  int zero_roots = 0;

  bool all_slopes_integral() const;
};

/// Lower convex hull of (i, v_p(c_i)) over the nonzero coefficients.
/// Throws DomainError on the zero polynomial.
NewtonPolygon newton_polygon(const Polynomial& f, const Prime& p);

/// Integer coefficients of a nonzero polynomial after clearing denominators
/// and dividing out the content, with positive leading coefficient.
std::vector<BigInt> primitive_integer_coefficients(const Polynomial& f);

}  // namespace padiceq
