#include "padiceq/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "padiceq/errors.hpp"

namespace padiceq {

namespace {

// Upper bound on (#divisors of a0) * (#divisors of an) tried by rational_roots.
constexpr std::size_t kMaxRootCandidates = 20'000'000;
constexpr unsigned long kTrialDivisionBound = 100'000;
constexpr unsigned long kRhoIterations = 2'000'000;

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
BigInt pollard_rho(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 20; ++c) {
    BigInt x = 2;
    BigInt y = 2;
    BigInt g = 1;
    BigInt q = 1;
    BigInt ys;
    unsigned long r = 1;
    unsigned long spent = 0;
    const unsigned long m = 128;
    auto f = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          f(y);
          BigInt diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
      spent += r;
    } while (g == 1 && spent < kRhoIterations);
    if (g == n) {
      do {
        f(ys);
        BigInt diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

void factor_into(BigInt n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  const BigInt f = pollard_rho(n);
  if (f == 0) throw LimitError("rational_roots: could not factor coefficient " + n.get_str());
  factor_into(f, out);
  factor_into(n / f, out);
}

std::map<BigInt, unsigned> factorize(BigInt n) {
  std::map<BigInt, unsigned> out;
  n = abs(n);
  for (unsigned long q = 2; q <= kTrialDivisionBound && q * q <= n; q += (q == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
      ++out[BigInt(q)];
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
    }
  }
  factor_into(n, out);
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> out{1};
  for (const auto& [prime, exp] : factorize(n)) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// s^n g(r/s) for an integer polynomial g of degree n.
BigInt homogeneous_value(const std::vector<BigInt>& g, const BigInt& r, const BigInt& s) {
  const std::size_t n = g.size() - 1;
  BigInt acc = g[n];
  BigInt s_pow = 1;
  for (std::size_t i = n; i-- > 0;) {
    s_pow *= s;
    acc = acc * r + g[i] * s_pow;
  }
  return acc;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> cs(degree + 1);
  cs[degree] = c;
  return Polynomial(std::move(cs));
}

Polynomial Polynomial::linear_factor(const Rational& r) { return Polynomial{-r, Rational(1)}; }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::evaluate(const Matrix& m) const {
  if (!m.is_square()) throw DimensionError("polynomial evaluated at a non-square matrix");
  Matrix acc(m.rows(), m.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + Matrix::scalar(m.rows(), *it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return leading().inverse() * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) - b.coefficient(i);
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& f) {
  std::vector<Rational> out = f.coeffs_;
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != Rational(1)) os << mag;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = b.leading().inverse();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= q * b.coefficient(static_cast<std::size_t>(i));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("is_squarefree of the zero polynomial");
  return gcd(f, f.derivative()).degree() <= 0;
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("squarefree_part of the zero polynomial");
  if (f.degree() <= 0) return Polynomial{Rational(1)};
  return divmod(f, gcd(f, f.derivative())).first.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("squarefree_decomposition of the zero polynomial");
  std::vector<std::pair<Polynomial, int>> out;
  if (f.degree() <= 0) return out;
  const Polynomial g = f.monic();
  const Polynomial g1 = g.derivative();
  const Polynomial a0 = gcd(g, g1);
  Polynomial b = divmod(g, a0).first;
  Polynomial c = divmod(g1, a0).first;
  Polynomial d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Polynomial a = gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
  }
  return out;
}

Polynomial char_poly(const Matrix& m, std::size_t limit) {
  if (!m.is_square()) throw DimensionError("char_poly of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > limit) {
    throw LimitError("char_poly dimension cap exceeded: " + std::to_string(n) + " > " + std::to_string(limit));
  }
  // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  Matrix mk = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix am = m * mk;
    c[n - k] = -trace(am) / Rational(static_cast<long>(k));
    if (k < n) mk = am + Matrix::scalar(n, c[n - k]);
  }
  return Polynomial(std::move(c));
}

std::vector<BigInt> primitive_integer_coefficients(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("primitive form of the zero polynomial");
  BigInt lcm_den = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<BigInt> out;
  out.reserve(f.coefficients().size());
  BigInt content = 0;
  for (const auto& c : f.coefficients()) {
    BigInt v = c.numerator() * (lcm_den / c.denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

std::vector<RationalRoot> rational_roots(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  std::vector<RationalRoot> roots;
  const auto& cs = f.coefficients();
  std::size_t zeros = 0;
  while (zeros < cs.size() && cs[zeros].is_zero()) ++zeros;
  if (zeros > 0) roots.push_back({Rational(0), static_cast<int>(zeros)});
  Polynomial rest(std::vector<Rational>(cs.begin() + static_cast<std::ptrdiff_t>(zeros), cs.end()));
  if (rest.degree() <= 0) return roots;

  // Roots are shared with the squarefree part, whose coefficients are usually smaller.
  const Polynomial core = squarefree_part(rest);
  const auto g = primitive_integer_coefficients(core);
  const auto num_divs = divisors(g.front());
  const auto den_divs = divisors(g.back());
  if (num_divs.size() * den_divs.size() > kMaxRootCandidates) {
    throw LimitError("rational_roots: too many candidate roots");
  }
  // Cauchy bound: |x| <= 1 + max |g_i / g_n|.
  BigInt max_coeff = 0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) max_coeff = std::max(max_coeff, BigInt(abs(g[i])));
  const Rational cauchy = Rational(1) + Rational(max_coeff, g.back());

  std::vector<Rational> found;
  for (const auto& s : den_divs) {
    for (const auto& r : num_divs) {
      BigInt common;
      mpz_gcd(common.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
      if (common != 1) continue;
      const Rational mag(r, s);
      if (mag > cauchy) continue;
      for (int sign : {1, -1}) {
        const BigInt signed_r = sign * r;
        if (homogeneous_value(g, signed_r, s) == 0) found.emplace_back(signed_r, s);
      }
    }
  }
  std::sort(found.begin(), found.end());
  for (const auto& r : found) {
    const Polynomial factor = Polynomial::linear_factor(r);
    int multiplicity = 0;
    for (;;) {
      auto [q, rem] = divmod(rest, factor);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++multiplicity;
    }
    roots.push_back({r, multiplicity});
  }
  std::sort(roots.begin(), roots.end(), [](const RationalRoot& a, const RationalRoot& b) { return a.root < b.root; });
  return roots;
}

bool NewtonPolygon::all_slopes_integral() const {
  return std::all_of(segments.begin(), segments.end(), [](const NewtonSegment& s) { return s.slope.is_integer(); });
}

NewtonPolygon newton_polygon(const Polynomial& f, const Prime& p) {
  if (f.is_zero()) throw DomainError("newton_polygon of the zero polynomial");
  struct Point {
    long x;
    std::int64_t y;
  };
  std::vector<Point> points;
  const auto& cs = f.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!cs[i].is_zero()) points.push_back({static_cast<long>(i), valuation(cs[i], p).value()});
  }
  NewtonPolygon poly;
  poly.zero_roots = static_cast<int>(points.front().x);

  auto slope = [](const Point& a, const Point& b) {
    return Rational(BigInt(static_cast<long>(b.y - a.y)), BigInt(b.x - a.x));
  };
  std::vector<Point> hull;
  for (const auto& pt : points) {
    // Drop the last hull vertex while it lies on or above the chord to pt.
    while (hull.size() >= 2 && slope(hull[hull.size() - 2], hull.back()) >= slope(hull.back(), pt)) hull.pop_back();
    hull.push_back(pt);
  }
  for (std::size_t i = 1; i < hull.size(); ++i) {
    poly.segments.push_back({slope(hull[i - 1], hull[i]), static_cast<int>(hull[i].x - hull[i - 1].x)});
  }
  return poly;
}

}  // namespace padiceq
