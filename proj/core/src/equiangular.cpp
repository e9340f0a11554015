#include "padiceq/equiangular.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "padiceq/errors.hpp"

namespace padiceq {

namespace {

constexpr std::array<std::pair<Evidence, std::string_view>, 5> kEvidenceNames{{
    {Evidence::rational_spectrum_proved, "rational-spectrum-proved"},
    {Evidence::hensel_witnessed, "hensel-witnessed"},
    {Evidence::newton_valuations_only, "newton-valuations-only"},
    {Evidence::trace_inequality_only, "trace-inequality-only"},
    {Evidence::failed, "failed"},
}};

Rational from_size(std::size_t v) { return Rational(BigInt(std::to_string(v), 10)); }

std::string valuation_text(const Rational& x, const Prime& p) { return valuation(x, p).to_string(); }

// Valuation-only eigen entries from the Newton polygon of f; every count is
// scaled by `multiplicity`.
void append_newton_entries(const Polynomial& f, const Prime& p, int multiplicity, std::vector<EigenEntry>& out) {
  const NewtonPolygon np = newton_polygon(f, p);
  for (const auto& seg : np.segments) {
    out.push_back({EigenEntry::Kind::valuation_only, "", seg.root_valuation().to_string(), seg.length * multiplicity});
  }
}

}  // namespace

Configuration::Configuration(Prime p, std::vector<Vector> vectors, Rational a, std::optional<PadicAbs> declared_gamma)
    : p_(std::move(p)), d_(0), vectors_(std::move(vectors)), a_(std::move(a)),
      declared_gamma_(std::move(declared_gamma)) {
  if (vectors_.empty()) throw DimensionError("configuration needs at least one vector");
  d_ = vectors_.front().size();
  if (d_ == 0) throw DimensionError("dimension must be positive");
  for (std::size_t j = 0; j < vectors_.size(); ++j) {
    if (vectors_[j].size() != d_) {
      throw DimensionError("vectors[" + std::to_string(j) + "] has length " + std::to_string(vectors_[j].size()) +
                           ", expected " + std::to_string(d_));
    }
  }
  if (a_.is_zero()) throw DomainError("a must be nonzero");
}

std::string_view to_string(Evidence e) {
  for (const auto& [k, name] : kEvidenceNames) {
    if (k == e) return name;
  }
  return "failed";
}

Evidence parse_evidence(std::string_view text) {
  for (const auto& [k, name] : kEvidenceNames) {
    if (name == text) return k;
  }
  throw ParseError("unknown evidence level '" + std::string(text) + "'");
}

std::string_view to_string(SpectrumStatus s) {
  switch (s) {
    case SpectrumStatus::proved:
      return "proved";
    case SpectrumStatus::disproved:
      return "disproved";
    case SpectrumStatus::unknown:
      break;
  }
  return "unknown";
}

SpectrumStatus parse_spectrum_status(std::string_view text) {
  if (text == "proved") return SpectrumStatus::proved;
  if (text == "disproved") return SpectrumStatus::disproved;
  if (text == "unknown") return SpectrumStatus::unknown;
  throw ParseError("unknown spectrum status '" + std::string(text) + "'");
}

std::string_view to_string(EigenEntry::Kind k) {
  switch (k) {
    case EigenEntry::Kind::rational:
      return "rational";
    case EigenEntry::Kind::padic:
      return "padic";
    case EigenEntry::Kind::valuation_only:
      break;
  }
  return "valuation-only";
}

EigenEntry::Kind parse_eigen_kind(std::string_view text) {
  if (text == "rational") return EigenEntry::Kind::rational;
  if (text == "padic") return EigenEntry::Kind::padic;
  if (text == "valuation-only") return EigenEntry::Kind::valuation_only;
  throw ParseError("unknown eigenvalue kind '" + std::string(text) + "'");
}

bool ConditionIII::holds() const {
  return inequality_holds &&
         (evidence == Evidence::rational_spectrum_proved || evidence == Evidence::hensel_witnessed);
}

bool check_condition_i(const Configuration& cfg) {
  return std::all_of(cfg.vectors().begin(), cfg.vectors().end(),
                     [&](const Vector& t) { return inner_product(t, t) == cfg.a(); });
}

PadicAbs max_pairing_abs(const Configuration& cfg) {
  if (cfg.n() < 2) throw DomainError("need at least two lines");
  PadicAbs best = PadicAbs::zero();
  const auto& vs = cfg.vectors();
  for (std::size_t j = 0; j < vs.size(); ++j) {
    for (std::size_t k = j + 1; k < vs.size(); ++k) best = max(best, abs_p(inner_product(vs[j], vs[k]), cfg.p()));
  }
  return best;
}

ConditionII check_condition_ii(const Configuration& cfg) {
  if (cfg.n() < 2) throw DomainError("need at least two lines");
  ConditionII out;
  const auto& vs = cfg.vectors();
  std::optional<PadicAbs> common;
  bool equal = true;
  for (std::size_t j = 0; j < vs.size(); ++j) {
    for (std::size_t k = j + 1; k < vs.size(); ++k) {
      const PadicAbs v = abs_p(inner_product(vs[j], vs[k]), cfg.p());
      out.max_pairing = max(out.max_pairing, v);
      if (!common) {
        common = v;
      } else if (*common != v) {
        equal = false;
      }
    }
  }
  if (equal) out.gamma = common;
  out.holds = equal;
  if (equal && cfg.declared_gamma() && *cfg.declared_gamma() != *common) {
    out.declared_mismatch = true;
    out.holds = false;
  }
  return out;
}

std::optional<Rational> check_tight_frame(const Configuration& cfg) {
  const Matrix s = frame_operator(cfg.vectors());
  const Rational b = s(0, 0);
  if (b.is_zero()) return std::nullopt;
  if (s != Matrix::scalar(cfg.d(), b)) return std::nullopt;
  return b;
}

ConditionIII check_condition_iii(const Configuration& cfg, const CertifyOptions& options) {
  const Prime& p = cfg.p();
  const std::size_t d = cfg.d();
  const Matrix s = frame_operator(cfg.vectors());

  ConditionIII out;
  out.trace_s = trace(s);
  out.trace_s2 = trace_of_square(s);
  const PadicAbs abs_tr = abs_p(out.trace_s, p);
  out.inequality_holds = abs_tr.squared() <= abs_p(from_size(d), p) * abs_p(out.trace_s2, p);

  if (const auto b = check_tight_frame(cfg)) {
    out.tight_frame_b = b;
    out.evidence = Evidence::rational_spectrum_proved;
    out.spectrum = SpectrumStatus::proved;
    out.diagonalizable = true;
    Polynomial chi{Rational(1)};
    for (std::size_t i = 0; i < d; ++i) chi = chi * Polynomial::linear_factor(*b);
    out.char_poly = chi.to_string();
    out.eigen_info.push_back({EigenEntry::Kind::rational, b->to_string(), valuation_text(*b, p), static_cast<int>(d)});
    return out;
  }

  const Polynomial chi = char_poly(s, options.char_poly_limit);
  out.char_poly = chi.to_string();

  std::vector<RationalRoot> roots;
  try {
    roots = rational_roots(chi);
  } catch (const LimitError& e) {
    out.evidence = Evidence::trace_inequality_only;
    out.spectrum = SpectrumStatus::unknown;
    out.note = e.what();
    return out;
  }

  out.diagonalizable = squarefree_part(chi).evaluate(s).is_zero();

  Polynomial rest = chi;
  int rational_count = 0;
  for (const auto& r : roots) {
    out.eigen_info.push_back({EigenEntry::Kind::rational, r.root.to_string(), valuation_text(r.root, p), r.multiplicity});
    rational_count += r.multiplicity;
    for (int m = 0; m < r.multiplicity; ++m) rest = divmod(rest, Polynomial::linear_factor(r.root)).first;
  }

  if (!*out.diagonalizable) {
    out.evidence = Evidence::failed;
    out.note = "minimal polynomial is not squarefree: S is not diagonalizable";
    if (rational_count == static_cast<int>(d)) out.spectrum = SpectrumStatus::proved;
    return out;
  }
  if (rational_count == static_cast<int>(d)) {
    out.evidence = Evidence::rational_spectrum_proved;
    out.spectrum = SpectrumStatus::proved;
    return out;
  }

  bool all_witnessed = true;
  bool disproved = false;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(rest)) {
    const NewtonPolygon np = newton_polygon(factor, p);
    if (!np.all_slopes_integral()) {
      disproved = true;
      all_witnessed = false;
      append_newton_entries(factor, p, multiplicity, out.eigen_info);
      continue;
    }
    const PadicRootSearch search = find_padic_roots(factor, p, options.hensel_precision);
    if (search.complete && static_cast<int>(search.roots.size()) == factor.degree()) {
      for (const auto& root : search.roots) {
        out.eigen_info.push_back(
            {EigenEntry::Kind::padic, root.to_string(p), std::to_string(root.valuation(p)), multiplicity});
      }
      continue;
    }
    all_witnessed = false;
    if (search.complete) disproved = true;
    append_newton_entries(factor, p, multiplicity, out.eigen_info);
  }

  if (all_witnessed) {
    out.evidence = Evidence::hensel_witnessed;
    out.spectrum = SpectrumStatus::proved;
  } else {
    out.evidence = Evidence::newton_valuations_only;
    out.spectrum = disproved ? SpectrumStatus::disproved : SpectrumStatus::unknown;
    if (!disproved && p.value() > kMaxHenselPrime) out.note = "p exceeds the Hensel search range";
  }
  return out;
}

BoundReport bound_padic_welch(const Configuration& cfg) {
  BoundReport r =
      evaluate_relative_form(BoundKind::padic_welch, cfg.n(), cfg.d(), max_pairing_abs(cfg), Rational(1), cfg.p());
  const bool unit_norms = std::all_of(cfg.vectors().begin(), cfg.vectors().end(),
                                      [](const Vector& t) { return inner_product(t, t) == Rational(1); });
  r.hypotheses_verified = unit_norms && check_condition_iii(cfg).holds();
  return r;
}

BoundReport bound_ga_welch(const Configuration& cfg) {
  BoundReport r =
      evaluate_relative_form(BoundKind::ga_welch, cfg.n(), cfg.d(), max_pairing_abs(cfg), cfg.a(), cfg.p());
  r.hypotheses_verified = check_condition_i(cfg) && check_condition_iii(cfg).holds();
  return r;
}

Certificate certify(const Configuration& cfg, const CertifyOptions& options) {
  Certificate cert{cfg, false, {}, {}, {}, false, "", {}};
  cert.condition_i = check_condition_i(cfg);
  cert.condition_ii = check_condition_ii(cfg);
  cert.condition_iii = check_condition_iii(cfg, options);

  const bool unit_norms = cfg.a() == Rational(1) && cert.condition_i;
  const bool iii = cert.condition_iii.holds();
  const PadicAbs gamma = cert.condition_ii.gamma.value_or(cert.condition_ii.max_pairing);
  const PadicAbs corr = cert.condition_ii.max_pairing;
  const Prime& p = cfg.p();

  auto add = [&](BoundReport r, bool hypotheses) {
    r.hypotheses_verified = hypotheses;
    cert.bounds.push_back(std::move(r));
  };
  BoundReport rel = evaluate_relative_form(BoundKind::padic_relative, cfg.n(), cfg.d(), gamma, Rational(1), p);
  if (!cert.condition_ii.gamma) rel.note = "no common angle; gamma read as the maximal pairing";
  add(std::move(rel), unit_norms && cert.condition_ii.holds && iii);
  add(evaluate_relative_form(BoundKind::padic_welch, cfg.n(), cfg.d(), corr, Rational(1), p), unit_norms && iii);
  BoundReport ga = evaluate_relative_form(BoundKind::ga_relative, cfg.n(), cfg.d(), gamma, cfg.a(), p);
  if (!cert.condition_ii.gamma) ga.note = "no common angle; gamma read as the maximal pairing";
  add(std::move(ga), cert.condition_i && cert.condition_ii.holds && iii);
  add(evaluate_relative_form(BoundKind::ga_welch, cfg.n(), cfg.d(), corr, cfg.a(), p), cert.condition_i && iii);
  add(bound_classical_gerzon(cfg.n(), cfg.d()), false);

  cert.certified = cert.condition_i && cert.condition_ii.holds && iii;
  if (cert.certified) {
    cert.verdict = "certified";
  } else if (cert.condition_i && cert.condition_ii.holds && cert.condition_iii.inequality_holds &&
             cert.condition_iii.spectrum == SpectrumStatus::unknown) {
    cert.verdict = "conditional";
  } else {
    cert.verdict = "not-equiangular";
  }

  if (cert.condition_ii.declared_mismatch) {
    cert.notes.push_back("declared gamma " + cfg.declared_gamma()->to_string(p) + " does not match measured " +
                         cert.condition_ii.gamma->to_string(p));
  }
  if (cert.condition_iii.tight_frame_b) {
    cert.notes.push_back("tight frame S = bI: gamma in the tight-frame bound read as max_{j!=k} |<t_j,t_k>|_p = " +
                         corr.to_string(p));
  }
  return cert;
}

}  // namespace padiceq
