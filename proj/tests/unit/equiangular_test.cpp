#include <vector>

#include <gtest/gtest.h>

#include "padiceq/equiangular.hpp"
#include "padiceq/errors.hpp"
#include "padiceq/search.hpp"

namespace padiceq {
namespace {

Rational q(const char* s) { return Rational::parse(s); }
Vector v2(long x, long y) { return Vector{Rational(x), Rational(y)}; }

const std::vector<Vector> kPair{{q("3/5"), q("4/5")}, {Rational(1), Rational(0)}};

std::vector<Vector> standard_basis(std::size_t d) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < d; ++i) {
    Vector e(d);
    e[i] = Rational(1);
    out.push_back(e);
  }
  return out;
}

TEST(ConfigurationTest, Invariants) {
  EXPECT_THROW(Configuration(Prime(5), {}), DimensionError);
  EXPECT_THROW(Configuration(Prime(5), {v2(1, 0), Vector{Rational(1)}}), DimensionError);
  EXPECT_THROW(Configuration(Prime(5), kPair, Rational(0)), DomainError);
  const Configuration cfg(Prime(5), kPair);
  EXPECT_EQ(cfg.n(), 2u);
  EXPECT_EQ(cfg.d(), 2u);
  EXPECT_EQ(cfg.vectors(), kPair);
}

TEST(ConditionITest, Examples) {
  EXPECT_TRUE(check_condition_i(Configuration(Prime(5), standard_basis(2))));
  EXPECT_TRUE(check_condition_i(Configuration(Prime(5), kPair)));
  for (unsigned long p : {2UL, 3UL, 5UL}) EXPECT_FALSE(check_condition_i(Configuration(Prime(p), {v2(1, 1), v2(1, 0)})));
  EXPECT_TRUE(check_condition_i(Configuration(Prime(3), {v2(1, 1), v2(1, -1)}, Rational(2))));
}

TEST(ConditionIITest, Examples) {
  for (unsigned long p : {2UL, 3UL, 7UL}) {
    const auto r = check_condition_ii(Configuration(Prime(p), standard_basis(3)));
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.gamma, std::optional<PadicAbs>(PadicAbs::zero()));
  }
  const auto pair = check_condition_ii(Configuration(Prime(5), kPair));
  EXPECT_TRUE(pair.holds);
  EXPECT_EQ(pair.gamma, std::optional<PadicAbs>(PadicAbs::pow(1)));

  const auto three = check_condition_ii(Configuration(Prime(5), {kPair[0], kPair[1], v2(0, 1)}));
  EXPECT_FALSE(three.holds);
  EXPECT_FALSE(three.gamma.has_value());
  EXPECT_EQ(three.max_pairing, PadicAbs::pow(1));

  EXPECT_THROW(check_condition_ii(Configuration(Prime(5), {v2(1, 0)})), DomainError);

  const auto mismatch = check_condition_ii(Configuration(Prime(5), kPair, Rational(1), PadicAbs::pow(2)));
  EXPECT_FALSE(mismatch.holds);
  EXPECT_TRUE(mismatch.declared_mismatch);
  EXPECT_TRUE(check_condition_ii(Configuration(Prime(5), kPair, Rational(1), PadicAbs::pow(1))).holds);
}

TEST(ConditionIIITest, StandardBasis) {
  for (std::size_t d : {1u, 2u, 5u}) {
    const auto r = check_condition_iii(Configuration(Prime(3), standard_basis(d)));
    EXPECT_EQ(r.evidence, Evidence::rational_spectrum_proved);
    EXPECT_TRUE(r.inequality_holds);
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(r.tight_frame_b, std::optional<Rational>(Rational(1)));
    ASSERT_EQ(r.eigen_info.size(), 1u);
    EXPECT_EQ(r.eigen_info[0].multiplicity, static_cast<int>(d));
  }
}

TEST(ConditionIIITest, CertifiedPair) {
  const auto r = check_condition_iii(Configuration(Prime(5), kPair));
  EXPECT_EQ(r.evidence, Evidence::rational_spectrum_proved);
  EXPECT_EQ(r.spectrum, SpectrumStatus::proved);
  EXPECT_EQ(r.trace_s, Rational(2));
  EXPECT_EQ(r.trace_s2, q("68/25"));
  EXPECT_EQ(r.char_poly, "x^2 - 2x + 16/25");
  EXPECT_EQ(r.diagonalizable, std::optional<bool>(true));
  ASSERT_EQ(r.eigen_info.size(), 2u);
  EXPECT_EQ(r.eigen_info[0].value, "2/5");
  EXPECT_EQ(r.eigen_info[1].value, "8/5");
  EXPECT_EQ(r.eigen_info[0].valuation, "-1");
  EXPECT_TRUE(r.holds());
}

TEST(ConditionIIITest, FractionalSlopeRejectsSpectrum) {
  // S = [[12, 4], [4, 4]], char poly x^2 - 16x + 32, whose 2-adic Newton
  // polygon is a single edge of slope -5/2: the eigenvalues are not in Q_2.
  const Configuration cfg(Prime(2), {v2(-2, -2), v2(-2, 0), v2(2, 0)}, Rational(8));
  const auto r = check_condition_iii(cfg);
  EXPECT_EQ(r.char_poly, "x^2 - 16x + 32");
  EXPECT_EQ(r.evidence, Evidence::newton_valuations_only);
  EXPECT_EQ(r.spectrum, SpectrumStatus::disproved);
  EXPECT_FALSE(r.holds());
  ASSERT_EQ(r.eigen_info.size(), 1u);
  EXPECT_EQ(r.eigen_info[0].kind, EigenEntry::Kind::valuation_only);
  EXPECT_EQ(r.eigen_info[0].valuation, "5/2");
  EXPECT_EQ(r.eigen_info[0].multiplicity, 2);
}

TEST(ConditionIIITest, HenselWitnessAndRefutation) {
  // S = [[2, 1], [1, 1]], char poly x^2 - 3x + 1 with discriminant 5.
  const std::vector<Vector> vs{v2(1, 1), v2(1, 0)};
  const auto at11 = check_condition_iii(Configuration(Prime(11), vs));
  EXPECT_EQ(at11.evidence, Evidence::hensel_witnessed);
  EXPECT_EQ(at11.spectrum, SpectrumStatus::proved);
  ASSERT_EQ(at11.eigen_info.size(), 2u);
  EXPECT_EQ(at11.eigen_info[0].kind, EigenEntry::Kind::padic);
  EXPECT_TRUE(at11.holds());

  // 5 is not a square mod 3, and over Q_5 the double root mod 5 does not lift.
  for (unsigned long p : {3UL, 5UL}) {
    const auto r = check_condition_iii(Configuration(Prime(p), vs));
    EXPECT_EQ(r.evidence, Evidence::newton_valuations_only) << p;
    EXPECT_EQ(r.spectrum, SpectrumStatus::disproved) << p;
    EXPECT_FALSE(r.holds());
  }

  // Beyond the residue search range the ladder stops at valuations.
  const auto big = check_condition_iii(Configuration(Prime(1000003), vs));
  EXPECT_EQ(big.evidence, Evidence::newton_valuations_only);
  EXPECT_EQ(big.spectrum, SpectrumStatus::unknown);
}

TEST(ConditionIIITest, CharPolyCap) {
  const Configuration cfg(Prime(3), {v2(1, 1), v2(1, 0)});
  EXPECT_THROW(check_condition_iii(cfg, CertifyOptions{.char_poly_limit = 1, .hensel_precision = 8}), LimitError);
}

TEST(ConditionIIITest, SingularFrameOperator) {
  // n < d: S has a zero eigenvalue, which is rational.
  const auto r = check_condition_iii(Configuration(Prime(3), {Vector{Rational(1), Rational(0), Rational(0)}}));
  EXPECT_EQ(r.evidence, Evidence::rational_spectrum_proved);
  EXPECT_EQ(r.eigen_info.front().valuation, "inf");
  EXPECT_EQ(r.eigen_info.front().multiplicity, 2);
}

TEST(TightFrameTest, Examples) {
  EXPECT_EQ(check_tight_frame(Configuration(Prime(5), standard_basis(2))), std::optional<Rational>(Rational(1)));
  EXPECT_FALSE(check_tight_frame(Configuration(Prime(5), {v2(1, 0), v2(0, 1), v2(1, 0)})).has_value());
  const Configuration frame(Prime(5), {v2(1, 2), v2(2, -1), v2(2, 1), v2(1, -2)}, Rational(5));
  EXPECT_EQ(check_tight_frame(frame), std::optional<Rational>(Rational(10)));
}

TEST(TightFrameTest, BruteForceSearchSatisfiesTraceRelation) {
  // Every 4-element equal-norm family from {-2..2}^2 with S = bI has
  // b * d = n * a and satisfies condition (iii) with equality.
  std::vector<Vector> pool;
  for (long x = -2; x <= 2; ++x) {
    for (long y = -2; y <= 2; ++y) {
      if (x != 0 || y != 0) pool.push_back(v2(x, y));
    }
  }
  int found = 0;
  const std::size_t m = pool.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Rational a = inner_product(pool[i], pool[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      if (inner_product(pool[j], pool[j]) != a) continue;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (inner_product(pool[k], pool[k]) != a) continue;
        for (std::size_t l = k + 1; l < m; ++l) {
          if (inner_product(pool[l], pool[l]) != a) continue;
          const Configuration cfg(Prime(5), {pool[i], pool[j], pool[k], pool[l]}, a);
          const auto b = check_tight_frame(cfg);
          if (!b) continue;
          ++found;
          EXPECT_EQ(*b * Rational(2), Rational(4) * a);
          for (unsigned long p : {2UL, 3UL, 5UL}) {
            const Configuration at_p(Prime(p), cfg.vectors(), a);
            const auto r = check_condition_iii(at_p);
            EXPECT_TRUE(r.inequality_holds);
            EXPECT_EQ(abs_p(r.trace_s, Prime(p)).squared(), abs_p(Rational(2), Prime(p)) * abs_p(r.trace_s2, Prime(p)));
          }
        }
      }
    }
  }
  EXPECT_GT(found, 0);
}

TEST(CertifyTest, Examples) {
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    const auto cert = certify(Configuration(Prime(p), standard_basis(3)));
    EXPECT_TRUE(cert.certified);
    EXPECT_EQ(cert.verdict, "certified");
    EXPECT_EQ(cert.condition_ii.gamma, std::optional<PadicAbs>(PadicAbs::zero()));
  }
  const auto pair = certify(Configuration(Prime(5), kPair));
  EXPECT_TRUE(pair.certified);
  EXPECT_EQ(pair.condition_ii.gamma, std::optional<PadicAbs>(PadicAbs::pow(1)));
  ASSERT_EQ(pair.bounds.size(), 5u);
  EXPECT_EQ(pair.bounds[0].name, BoundKind::padic_relative);
  EXPECT_TRUE(pair.bounds[0].hypotheses_verified);
  EXPECT_TRUE(pair.bounds[0].holds);
  EXPECT_EQ(std::get<PadicAbs>(pair.bounds[0].rhs), PadicAbs::pow(2));
  EXPECT_EQ(pair.bounds[4].name, BoundKind::classical_gerzon);
  EXPECT_FALSE(pair.bounds[4].hypotheses_verified);

  const auto bad = certify(Configuration(Prime(5), {v2(1, 1), v2(1, 0)}));
  EXPECT_FALSE(bad.certified);
  EXPECT_EQ(bad.verdict, "not-equiangular");
  EXPECT_FALSE(bad.condition_i);
  for (const auto& b : bad.bounds) EXPECT_FALSE(b.hypotheses_verified);

  EXPECT_THROW(certify(Configuration(Prime(5), {v2(1, 0)})), DomainError);
}

TEST(CertifyTest, ConditionalVerdictWhenSpectrumUnknown) {
  // Equal norms and unit pairings, but S has char poly x^2 - 75x + 674 with
  // an irrational spectrum and p lies beyond the residue search range.
  const Configuration cfg(Prime(1000003), {v2(3, 4), v2(4, 3), v2(5, 0)}, Rational(25));
  const auto cert = certify(cfg);
  EXPECT_TRUE(cert.condition_i);
  EXPECT_TRUE(cert.condition_ii.holds);
  EXPECT_EQ(cert.condition_iii.char_poly, "x^2 - 75x + 674");
  EXPECT_EQ(cert.condition_iii.spectrum, SpectrumStatus::unknown);
  EXPECT_FALSE(cert.certified);
  EXPECT_EQ(cert.verdict, "conditional");
}

TEST(CertifyTest, DeclaredGammaMismatchNote) {
  const auto cert = certify(Configuration(Prime(5), kPair, Rational(1), PadicAbs::pow(3)));
  EXPECT_FALSE(cert.certified);
  ASSERT_FALSE(cert.notes.empty());
  EXPECT_NE(cert.notes[0].find("5^3"), std::string::npos);
}

TEST(CertifyTest, SignFlipInvariance) {
  SplitMix64 rng(8);
  for (unsigned long pv : {2UL, 3UL, 5UL}) {
    const Prime p(pv);
    for (int trial = 0; trial < 40; ++trial) {
      const auto d = static_cast<std::size_t>(rng.uniform(1, 3));
      const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
      std::vector<Vector> vs;
      for (std::size_t j = 0; j < n; ++j) {
        Vector v = random_vector(rng, p, d, 4, 1);
        if (v.is_zero()) v[0] = Rational(1);
        vs.push_back(v);
      }
      std::vector<Vector> flipped = vs;
      for (auto& v : flipped) {
        if (rng.uniform(0, 1)) v = -v;
      }
      const auto a = certify(Configuration(p, vs));
      const auto b = certify(Configuration(p, flipped));
      EXPECT_EQ(a.certified, b.certified);
      EXPECT_EQ(a.condition_ii.gamma, b.condition_ii.gamma);
      EXPECT_EQ(a.condition_iii.evidence, b.condition_iii.evidence);
      EXPECT_EQ(a.condition_iii.char_poly, b.condition_iii.char_poly);
      EXPECT_EQ(a.bounds, b.bounds);
    }
  }
}

TEST(CertifyTest, RationalEvidenceMeansSplitCharPoly) {
  SplitMix64 rng(31);
  for (unsigned long pv : {2UL, 3UL, 5UL, 7UL}) {
    const Prime p(pv);
    for (int trial = 0; trial < 60; ++trial) {
      const auto d = static_cast<std::size_t>(rng.uniform(1, 3));
      const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
      std::vector<Vector> vs;
      for (std::size_t j = 0; j < n; ++j) vs.push_back(random_vector(rng, p, d, 3, 1));
      const Configuration cfg(p, vs);
      const auto r = check_condition_iii(cfg);
      const Polynomial chi = char_poly(frame_operator(vs));
      if (r.evidence == Evidence::rational_spectrum_proved) {
        Polynomial prod{Rational(1)};
        for (const auto& e : r.eigen_info) {
          for (int m = 0; m < e.multiplicity; ++m) prod = prod * Polynomial::linear_factor(Rational::parse(e.value));
        }
        EXPECT_EQ(prod, chi);
      }
      const PadicAbs lhs = abs_p(trace(frame_operator(vs)), p).squared();
      const PadicAbs rhs = abs_p(Rational(static_cast<long>(d)), p) * abs_p(trace_of_square(frame_operator(vs)), p);
      EXPECT_EQ(r.inequality_holds, lhs <= rhs);
    }
  }
}

TEST(NamesTest, RoundTrip) {
  for (auto e : {Evidence::rational_spectrum_proved, Evidence::hensel_witnessed, Evidence::newton_valuations_only,
                 Evidence::trace_inequality_only, Evidence::failed}) {
    EXPECT_EQ(parse_evidence(to_string(e)), e);
  }
  EXPECT_EQ(to_string(Evidence::hensel_witnessed), "hensel-witnessed");
  EXPECT_THROW(parse_evidence("proved"), ParseError);
  for (auto s : {SpectrumStatus::proved, SpectrumStatus::disproved, SpectrumStatus::unknown}) {
    EXPECT_EQ(parse_spectrum_status(to_string(s)), s);
  }
}

}  // namespace
}  // namespace padiceq
