#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padiceq/bounds.hpp"
#include "padiceq/hensel.hpp"
#include "padiceq/linalg.hpp"
#include "padiceq/padic.hpp"
#include "padiceq/polynomial.hpp"

namespace padiceq {

/// A finite family t_1..t_n in Q_p^d together with the declared parameters.
/// Vectors are kept exactly as given; nothing is ever normalized.
class Configuration {
 public:
  /// Throws DimensionError for an empty family or unequal lengths and
  /// DomainError for a = 0.
  Configuration(Prime p, std::vector<Vector> vectors, Rational a = Rational(1),
                std::optional<PadicAbs> declared_gamma = std::nullopt);

  const Prime& p() const { return p_; }
  std::size_t d() const { return d_; }
  std::size_t n() const { return vectors_.size(); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const Rational& a() const { return a_; }
  const std::optional<PadicAbs>& declared_gamma() const { return declared_gamma_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  Prime p_;
  std::size_t d_;
  std::vector<Vector> vectors_;
  Rational a_;
  std::optional<PadicAbs> declared_gamma_;
};

enum class Evidence {
  rational_spectrum_proved,
  hensel_witnessed,
  newton_valuations_only,
  trace_inequality_only,
  failed,
};

std::string_view to_string(Evidence e);
Evidence parse_evidence(std::string_view text);

/// Whether every eigenvalue of S was shown to lie in Q_p.
enum class SpectrumStatus { proved, disproved, unknown };

std::string_view to_string(SpectrumStatus s);
SpectrumStatus parse_spectrum_status(std::string_view text);

struct EigenEntry {
  enum class Kind { rational, padic, valuation_only };
  Kind kind = Kind::rational;
  /// Exact rational, truncated p-adic expansion, or empty for valuation_only.
  std::string value;
  /// "inf" for the eigenvalue 0, otherwise an integer or a fraction.
  std::string valuation;
  int multiplicity = 0;

  friend bool operator==(const EigenEntry&, const EigenEntry&) = default;
};

std::string_view to_string(EigenEntry::Kind k);
EigenEntry::Kind parse_eigen_kind(std::string_view text);

struct ConditionII {
  bool holds = false;
  /// The common off-diagonal absolute value, when there is one.
  std::optional<PadicAbs> gamma;
  /// max_{j != k} |<t_j, t_k>|_p.
  PadicAbs max_pairing = PadicAbs::zero();
  bool declared_mismatch = false;
};

struct ConditionIII {
  Evidence evidence = Evidence::failed;
  SpectrumStatus spectrum = SpectrumStatus::unknown;
  /// rad(char poly)(S) == 0, i.e. the minimal polynomial is squarefree.
  std::optional<bool> diagonalizable;
  std::vector<EigenEntry> eigen_info;
  /// |Tr S|^2 <= |d| |Tr S^2|.
  bool inequality_holds = false;
  Rational trace_s;
  Rational trace_s2;
  std::optional<Rational> tight_frame_b;
  std::string char_poly;
  std::string note;

  /// Eigenvalues witnessed in Q_p and the inequality holds.
  bool holds() const;
};

struct CertifyOptions {
  std::size_t char_poly_limit = kDefaultCharPolyLimit;
  int hensel_precision = kDefaultHenselPrecision;
};

struct Certificate {
  Configuration config;
  bool condition_i = false;
  ConditionII condition_ii;
  ConditionIII condition_iii;
  std::vector<BoundReport> bounds;
  bool certified = false;
  /// "certified", "conditional" or "not-equiangular".
  std::string verdict;
  std::vector<std::string> notes;
};

/// Every <t_j, t_j> equals a exactly.
bool check_condition_i(const Configuration& cfg);

/// All off-diagonal |<t_j, t_k>|_p agree (and match the declared gamma, if
/// any). Throws DomainError("need at least two lines") when n < 2.
ConditionII check_condition_ii(const Configuration& cfg);

/// Evaluates |Tr S|^2 <= |d| |Tr S^2| and climbs the eigenvalue ladder:
/// tight frame, rational roots, Newton polygon, Hensel lifting.
ConditionIII check_condition_iii(const Configuration& cfg, const CertifyOptions& options = {});

/// b when S = b I exactly with b != 0.
std::optional<Rational> check_tight_frame(const Configuration& cfg);

/// max_{j != k} |<t_j, t_k>|_p; DomainError for n < 2.
PadicAbs max_pairing_abs(const Configuration& cfg);

BoundReport bound_padic_welch(const Configuration& cfg);
BoundReport bound_ga_welch(const Configuration& cfg);

Certificate certify(const Configuration& cfg, const CertifyOptions& options = {});

}  // namespace padiceq
