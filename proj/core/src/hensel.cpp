#include "padiceq/hensel.hpp"

#include <algorithm>
#include <sstream>

#include "padiceq/errors.hpp"

namespace padiceq {

namespace {

using IntPoly = std::vector<BigInt>;

BigInt power(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigInt eval(const IntPoly& g, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly derivative(const IntPoly& g) {
  IntPoly out;
  for (std::size_t i = 1; i < g.size(); ++i) out.push_back(g[i] * static_cast<unsigned long>(i));
  return out;
}

void trim(IntPoly& g) {
  while (!g.empty() && g.back() == 0) g.pop_back();
}

// Divides out the largest power of p common to all coefficients.
void remove_p_content(IntPoly& g, const BigInt& p) {
  for (;;) {
    for (const auto& c : g) {
      if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t())) return;
    }
    for (auto& c : g) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  }
}

// g(r + p*y) as a polynomial in y.
IntPoly shift_and_scale(const IntPoly& g, const BigInt& r, const BigInt& p) {
  IntPoly h = g;
  const std::size_t n = h.size();
  // Taylor shift by r (repeated synthetic division).
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = n - 1; i > k; --i) h[i - 1] += r * h[i];
  }
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    h[i] *= scale;
    scale *= p;
  }
  return h;
}

class RootFinder {
 public:
  RootFinder(const Prime& p, int precision) : p_(p.value()), precision_(precision), p_small_(p.to_u64()) {}

  void run(IntPoly g, const BigInt& prefix, int depth) {
    remove_p_content(g, p_);
    trim(g);
    if (g.size() <= 1) return;
    if (depth >= precision_) {
      complete_ = false;
      return;
    }
    const IntPoly dg = derivative(g);
    const BigInt p_depth = power(p_, static_cast<unsigned long>(depth));
    for (std::uint64_t r = 0; r < p_small_; ++r) {
      const BigInt rr(std::to_string(r), 10);
      if (!mpz_divisible_p(BigInt(eval(g, rr)).get_mpz_t(), p_.get_mpz_t())) continue;
      if (!mpz_divisible_p(BigInt(eval(dg, rr)).get_mpz_t(), p_.get_mpz_t())) {
        const BigInt y = lift(g, dg, rr, precision_ - depth);
        roots_.push_back(prefix + p_depth * y);
      } else {
        run(shift_and_scale(g, rr, p_), prefix + p_depth * rr, depth + 1);
      }
    }
  }

  std::vector<BigInt> roots() const { return roots_; }
  bool complete() const { return complete_; }

 private:
  // Newton iteration modulo p^digits from a simple root r mod p.
  BigInt lift(const IntPoly& g, const IntPoly& dg, BigInt x, int digits) const {
    const BigInt modulus = power(p_, static_cast<unsigned long>(digits));
    for (int guard = 0; guard < 2 * digits + 8; ++guard) {
      BigInt value = eval(g, x);
      mpz_mod(value.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
      if (value == 0) break;
      BigInt slope = eval(dg, x);
      BigInt inv;
      mpz_invert(inv.get_mpz_t(), slope.get_mpz_t(), modulus.get_mpz_t());
      x = x - value * inv;
      mpz_mod(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    }
    return x;
  }

  BigInt p_;
  int precision_;
  std::uint64_t p_small_;
  std::vector<BigInt> roots_;
  bool complete_ = true;
};

}  // namespace

std::int64_t PadicRoot::valuation(const Prime& p) const {
  BigInt modulus = power(p.value(), static_cast<unsigned long>(precision));
  BigInt r = residue;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  if (r == 0) return shift + precision;
  return shift + padiceq::valuation(r, p).value();
}

std::string PadicRoot::to_string(const Prime& p) const {
  const auto digits = base_p_digits(residue, p, precision);
  std::ostringstream os;
  if (shift != 0) os << p.to_string() << "^" << shift << " * ";
  os << "(";
  bool first = true;
  const int shown = std::min(precision, 8);
  for (int i = 0; i < shown; ++i) {
    const auto& dgt = digits[static_cast<std::size_t>(i)];
    if (dgt == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << dgt.get_str();
    if (i == 1) os << "*" << p.to_string();
    if (i > 1) os << "*" << p.to_string() << "^" << i;
  }
  if (!first) os << " + ";
  os << "O(" << p.to_string() << "^" << shown << "))";
  return os.str();
}

PadicRootSearch find_padic_roots(const Polynomial& f, const Prime& p, int precision) {
  if (f.is_zero()) throw DomainError("find_padic_roots of the zero polynomial");
  if (f.coefficient(0).is_zero()) throw DomainError("find_padic_roots expects f(0) != 0");
  if (!is_squarefree(f)) throw DomainError("find_padic_roots expects a squarefree polynomial");
  if (precision < 1) throw DomainError("find_padic_roots precision must be positive");

  PadicRootSearch out;
  if (f.degree() == 0) {
    out.complete = true;
    return out;
  }
  if (p.value() > kMaxHenselPrime) return out;

  // Roots of f in Q_p have valuation >= vmin = -(largest Newton slope), so
  // y = x / p^vmin ranges over Z_p.
  const NewtonPolygon np = newton_polygon(f, p);
  Rational max_slope = np.segments.back().slope;
  const Rational floor_val = -max_slope;
  BigInt vmin;
  mpz_fdiv_q(vmin.get_mpz_t(), floor_val.numerator().get_mpz_t(), floor_val.denominator().get_mpz_t());
  const std::int64_t shift = vmin.get_si();

  // h(y) = f(p^shift y), cleared to integer coefficients.
  std::vector<Rational> scaled(f.coefficients().size());
  const Rational ps = shift >= 0 ? Rational(power(p.value(), static_cast<unsigned long>(shift)))
                                 : Rational(power(p.value(), static_cast<unsigned long>(-shift))).inverse();
  Rational factor(1);
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    scaled[i] = f.coefficients()[i] * factor;
    factor *= ps;
  }
  IntPoly h = primitive_integer_coefficients(Polynomial(std::move(scaled)));

  RootFinder finder(p, precision);
  finder.run(std::move(h), BigInt(0), 0);
  out.complete = finder.complete();
  for (BigInt y : finder.roots()) {
    // Move factors of p from the residue into the shift so that a nonzero
    // residue is a unit.
    PadicRoot root{shift, 0, precision};
    while (y != 0 && root.precision > 1 && mpz_divisible_p(y.get_mpz_t(), p.value().get_mpz_t())) {
      mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), p.value().get_mpz_t());
      ++root.shift;
      --root.precision;
    }
    root.residue = y;
    out.roots.push_back(root);
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const PadicRoot& a, const PadicRoot& b) {
    return a.shift != b.shift ? a.shift < b.shift : a.residue < b.residue;
  });
  return out;
}

}  // namespace padiceq
