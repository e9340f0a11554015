#include "padiceq/json_io.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "padiceq/errors.hpp"

namespace padiceq {

namespace {

void reject_unknown(const Json& j, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || a == key;
    if (!known) throw ParseError(where + ": unknown field '" + key + "'");
  }
}

const Json& require(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError(where + ": expected a rational string such as \"-3/5\"");
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

bool bool_from_json(const Json& j, const std::string& where) {
  if (!j.is_boolean()) throw ParseError(where + ": expected true or false");
  return j.get<bool>();
}

std::uint64_t unsigned_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError(where + ": expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

Prime prime_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return Prime::parse(j.get<std::string>());
    if (j.is_number_unsigned() || j.is_number_integer()) return Prime(BigInt(j.dump(), 10));
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a prime as a string or integer");
}

PadicAbs padic_abs_from_json(const Json& j, const Prime& p, const std::string& where) {
  try {
    return PadicAbs::parse(string_from_json(j, where), p);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

BoundValue bound_value_from_json(const Json& j, BoundKind kind, const Prime& p, const std::string& where) {
  if (is_padic(kind)) return padic_abs_from_json(j, p, where);
  return rational_from_json(j, where);
}

SubCase sub_case_from_string(const std::string& s, const std::string& where) {
  if (s == "none") return SubCase::none;
  if (s == "small-n") return SubCase::small_n;
  if (s == "large-n") return SubCase::large_n;
  if (s == "boundary") return SubCase::boundary;
  throw ParseError(where + ": unknown sub-case '" + s + "'");
}

}  // namespace

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& e : v.entries()) out.push_back(e.to_string());
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Polynomial& f) {
  Json out = Json::array();
  for (const auto& c : f.coefficients()) out.push_back(c.to_string());
  return out;
}

Vector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a non-empty array of rationals");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a non-empty array of rows");
  const std::size_t rows = j.size();
  const Vector first = vector_from_json(j[0], where + "[0]");
  Matrix m(rows, first.size());
  for (std::size_t i = 0; i < rows; ++i) {
    const Vector row = vector_from_json(j[i], where + "[" + std::to_string(i) + "]");
    if (row.size() != first.size()) throw ParseError(where + "[" + std::to_string(i) + "]: ragged row");
    for (std::size_t c = 0; c < row.size(); ++c) m(i, c) = row[c];
  }
  return m;
}

Polynomial polynomial_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of coefficients");
  std::vector<Rational> cs;
  for (std::size_t i = 0; i < j.size(); ++i) cs.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return Polynomial(std::move(cs));
}

Json to_json(const Configuration& cfg) {
  Json out;
  out["p"] = cfg.p().to_string();
  out["d"] = cfg.d();
  out["a"] = cfg.a().to_string();
  Json vs = Json::array();
  for (const auto& v : cfg.vectors()) vs.push_back(to_json(v));
  out["vectors"] = std::move(vs);
  if (cfg.declared_gamma()) out["gamma"] = cfg.declared_gamma()->to_string(cfg.p());
  return out;
}

Configuration configuration_from_json(const Json& j) {
  const std::string where = "configuration";
  reject_unknown(j, where, {"mode", "p", "d", "a", "vectors", "gamma"});
  if (j.contains("mode") && string_from_json(j["mode"], "mode") != "certify") {
    throw ParseError("mode: expected \"certify\"");
  }
  const Prime p = prime_from_json(require(j, "p", where), "p");
  const Json& jv = require(j, "vectors", where);
  if (!jv.is_array() || jv.empty()) throw ParseError("vectors: expected a non-empty array of vectors");
  std::vector<Vector> vectors;
  for (std::size_t k = 0; k < jv.size(); ++k) vectors.push_back(vector_from_json(jv[k], "vectors[" + std::to_string(k) + "]"));

  if (j.contains("d")) {
    const auto d = unsigned_from_json(j["d"], "d");
    if (d == 0) throw ParseError("d: dimension must be positive");
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      if (vectors[k].size() != d) {
        throw ParseError("vectors[" + std::to_string(k) + "]: length " + std::to_string(vectors[k].size()) +
                         " does not match d = " + std::to_string(d));
      }
    }
  }
  Rational a(1);
  if (j.contains("a")) {
    a = rational_from_json(j["a"], "a");
    if (a.is_zero()) throw ParseError("a: must be nonzero");
  }
  std::optional<PadicAbs> gamma;
  if (j.contains("gamma")) gamma = padic_abs_from_json(j["gamma"], p, "gamma");
  try {
    return Configuration(p, std::move(vectors), a, gamma);
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const BoundReport& r, const Prime& p) {
  Json out;
  out["name"] = std::string(to_string(r.name));
  out["lhs"] = to_string(r.lhs, p);
  out["rhs"] = to_string(r.rhs, p);
  out["holds"] = r.holds;
  out["sub_case"] = std::string(to_string(r.sub_case));
  if (r.sub_case_holds) out["sub_case_holds"] = *r.sub_case_holds;
  out["hypotheses_verified"] = r.hypotheses_verified;
  if (r.implied_n_max) out["implied_n_max"] = r.implied_n_max->to_string();
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

BoundReport bound_report_from_json(const Json& j, const Prime& p) {
  const std::string where = "bound";
  reject_unknown(j, where,
                 {"name", "lhs", "rhs", "holds", "sub_case", "sub_case_holds", "hypotheses_verified", "implied_n_max",
                  "note"});
  BoundReport r;
  r.name = parse_bound_kind(string_from_json(require(j, "name", where), "bound.name"));
  r.lhs = bound_value_from_json(require(j, "lhs", where), r.name, p, "bound.lhs");
  r.rhs = bound_value_from_json(require(j, "rhs", where), r.name, p, "bound.rhs");
  r.holds = bool_from_json(require(j, "holds", where), "bound.holds");
  r.sub_case = sub_case_from_string(string_from_json(require(j, "sub_case", where), "bound.sub_case"), where);
  if (j.contains("sub_case_holds")) r.sub_case_holds = bool_from_json(j["sub_case_holds"], "bound.sub_case_holds");
  r.hypotheses_verified = bool_from_json(require(j, "hypotheses_verified", where), "bound.hypotheses_verified");
  if (j.contains("implied_n_max")) r.implied_n_max = rational_from_json(j["implied_n_max"], "bound.implied_n_max");
  if (j.contains("note")) r.note = string_from_json(j["note"], "bound.note");
  return r;
}

Json to_json(const Certificate& cert) {
  const Prime& p = cert.config.p();
  const auto& c2 = cert.condition_ii;
  const auto& c3 = cert.condition_iii;
  Json out;
  out["verdict"] = cert.verdict;
  out["certified"] = cert.certified;
  out["configuration"] = to_json(cert.config);
  out["n"] = cert.config.n();
  out["condition_i"] = cert.condition_i;
  out["condition_ii"] = c2.holds;
  out["gamma"] = c2.gamma ? Json(c2.gamma->to_string(p)) : Json(nullptr);
  out["max_pairing"] = c2.max_pairing.to_string(p);
  out["condition_iii"] = c3.holds();
  out["condition_iii_evidence"] = std::string(to_string(c3.evidence));
  out["condition_iii_inequality"] = c3.inequality_holds;
  out["qp_spectrum"] = std::string(to_string(c3.spectrum));
  out["diagonalizable"] = c3.diagonalizable ? Json(*c3.diagonalizable) : Json(nullptr);
  out["trace_S"] = c3.trace_s.to_string();
  out["trace_S2"] = c3.trace_s2.to_string();
  out["char_poly"] = c3.char_poly;
  out["tight_frame_b"] = c3.tight_frame_b ? Json(c3.tight_frame_b->to_string()) : Json(nullptr);
  Json eig = Json::array();
  for (const auto& e : c3.eigen_info) {
    Json je;
    je["kind"] = std::string(to_string(e.kind));
    je["value"] = e.value;
    je["valuation"] = e.valuation;
    je["multiplicity"] = e.multiplicity;
    eig.push_back(std::move(je));
  }
  out["eigen_info"] = std::move(eig);
  Json bounds = Json::array();
  for (const auto& r : cert.bounds) bounds.push_back(to_json(r, p));
  out["bounds"] = std::move(bounds);
  Json notes = Json::array();
  for (const auto& n : cert.notes) notes.push_back(n);
  if (!c3.note.empty()) notes.push_back(c3.note);
  out["notes"] = std::move(notes);
  return out;
}

Certificate certificate_from_json(const Json& j) {
  const std::string where = "certificate";
  reject_unknown(j, where,
                 {"verdict", "certified", "configuration", "n", "condition_i", "condition_ii", "gamma", "max_pairing",
                  "condition_iii", "condition_iii_evidence", "condition_iii_inequality", "qp_spectrum",
                  "diagonalizable", "trace_S", "trace_S2", "char_poly", "tight_frame_b", "eigen_info", "bounds",
                  "notes"});
  Configuration cfg = configuration_from_json(require(j, "configuration", where));
  const Prime p = cfg.p();
  Certificate cert{std::move(cfg), false, {}, {}, {}, false, "", {}};
  cert.verdict = string_from_json(require(j, "verdict", where), "verdict");
  cert.certified = bool_from_json(require(j, "certified", where), "certified");
  cert.condition_i = bool_from_json(require(j, "condition_i", where), "condition_i");
  cert.condition_ii.holds = bool_from_json(require(j, "condition_ii", where), "condition_ii");
  if (const Json& g = require(j, "gamma", where); !g.is_null()) cert.condition_ii.gamma = padic_abs_from_json(g, p, "gamma");
  cert.condition_ii.max_pairing = padic_abs_from_json(require(j, "max_pairing", where), p, "max_pairing");
  auto& c3 = cert.condition_iii;
  c3.evidence = parse_evidence(string_from_json(require(j, "condition_iii_evidence", where), "condition_iii_evidence"));
  c3.inequality_holds = bool_from_json(require(j, "condition_iii_inequality", where), "condition_iii_inequality");
  c3.spectrum = parse_spectrum_status(string_from_json(require(j, "qp_spectrum", where), "qp_spectrum"));
  if (const Json& dg = require(j, "diagonalizable", where); !dg.is_null()) c3.diagonalizable = bool_from_json(dg, "diagonalizable");
  c3.trace_s = rational_from_json(require(j, "trace_S", where), "trace_S");
  c3.trace_s2 = rational_from_json(require(j, "trace_S2", where), "trace_S2");
  c3.char_poly = string_from_json(require(j, "char_poly", where), "char_poly");
  if (const Json& b = require(j, "tight_frame_b", where); !b.is_null()) c3.tight_frame_b = rational_from_json(b, "tight_frame_b");
  const Json& eig = require(j, "eigen_info", where);
  if (!eig.is_array()) throw ParseError("eigen_info: expected an array");
  for (std::size_t i = 0; i < eig.size(); ++i) {
    const std::string w = "eigen_info[" + std::to_string(i) + "]";
    reject_unknown(eig[i], w, {"kind", "value", "valuation", "multiplicity"});
    EigenEntry e;
    e.kind = parse_eigen_kind(string_from_json(require(eig[i], "kind", w), w + ".kind"));
    e.value = string_from_json(require(eig[i], "value", w), w + ".value");
    e.valuation = string_from_json(require(eig[i], "valuation", w), w + ".valuation");
    e.multiplicity = static_cast<int>(unsigned_from_json(require(eig[i], "multiplicity", w), w + ".multiplicity"));
    c3.eigen_info.push_back(std::move(e));
  }
  const Json& bounds = require(j, "bounds", where);
  if (!bounds.is_array()) throw ParseError("bounds: expected an array");
  for (const auto& b : bounds) cert.bounds.push_back(bound_report_from_json(b, p));
  const Json& notes = require(j, "notes", where);
  if (!notes.is_array()) throw ParseError("notes: expected an array");
  for (const auto& n : notes) cert.notes.push_back(string_from_json(n, "notes[]"));
  return cert;
}

SearchJob search_job_from_json(const Json& j) {
  const std::string where = "search job";
  reject_unknown(j, where,
                 {"mode", "p", "d", "numerator_bound", "denominators", "a", "gamma", "max_n", "seed",
                  "fault_injection"});
  if (j.contains("mode") && string_from_json(j["mode"], "mode") != "search") {
    throw ParseError("mode: expected \"search\"");
  }
  std::vector<Prime> primes;
  const Json& jp = require(j, "p", where);
  if (jp.is_array()) {
    for (std::size_t i = 0; i < jp.size(); ++i) primes.push_back(prime_from_json(jp[i], "p[" + std::to_string(i) + "]"));
  } else {
    primes.push_back(prime_from_json(jp, "p"));
  }
  std::vector<std::size_t> dims;
  const Json& jd = require(j, "d", where);
  if (jd.is_array()) {
    for (std::size_t i = 0; i < jd.size(); ++i) dims.push_back(unsigned_from_json(jd[i], "d[" + std::to_string(i) + "]"));
  } else {
    dims.push_back(unsigned_from_json(jd, "d"));
  }
  if (primes.empty()) throw ParseError("p: expected at least one prime");
  if (dims.empty()) throw ParseError("d: expected at least one dimension");
  for (auto d : dims) {
    if (d == 0) throw ParseError("d: dimension must be positive");
  }
  const auto bound = unsigned_from_json(require(j, "numerator_bound", where), "numerator_bound");

  SearchJob job;
  if (j.contains("fault_injection")) job.fault_injection = bool_from_json(j["fault_injection"], "fault_injection");
  for (const auto& p : primes) {
    for (auto d : dims) {
      SearchSpace s = SearchSpace::with_defaults(p, d, static_cast<long>(bound));
      if (j.contains("denominators")) {
        const Json& dens = j["denominators"];
        if (!dens.is_array()) throw ParseError("denominators: expected an array of positive integers");
        s.denominators.clear();
        for (std::size_t i = 0; i < dens.size(); ++i) {
          const auto v = unsigned_from_json(dens[i], "denominators[" + std::to_string(i) + "]");
          if (v == 0) throw ParseError("denominators[" + std::to_string(i) + "]: must be positive");
          s.denominators.emplace_back(std::to_string(v), 10);
        }
      }
      if (j.contains("a")) {
        s.target_a = rational_from_json(j["a"], "a");
        if (s.target_a.is_zero()) throw ParseError("a: must be nonzero");
      }
      if (j.contains("gamma")) s.target_gamma = padic_abs_from_json(j["gamma"], p, "gamma");
      if (j.contains("max_n")) s.max_n = unsigned_from_json(j["max_n"], "max_n");
      if (j.contains("seed")) s.seed = unsigned_from_json(j["seed"], "seed");
      job.spaces.push_back(std::move(s));
    }
  }
  return job;
}

Json to_json(const SearchSpace& space) {
  Json out;
  out["p"] = space.p.to_string();
  out["d"] = space.d;
  out["numerator_bound"] = space.numerator_bound;
  Json dens = Json::array();
  for (const auto& den : space.denominators) dens.push_back(den.get_str());
  out["denominators"] = std::move(dens);
  out["a"] = space.target_a.to_string();
  out["gamma"] = space.target_gamma ? Json(space.target_gamma->to_string(space.p)) : Json(nullptr);
  out["max_n"] = space.max_n;
  out["seed"] = space.seed;
  return out;
}

Json to_json(const SearchResult& result) {
  const Prime& p = result.space.p;
  Json out;
  out["space"] = to_json(result.space);
  out["candidate_count"] = result.candidate_count;
  out["unit_vector_count"] = result.unit_vector_count;
  out["line_count"] = result.line_count;
  out["clique_count"] = result.clique_count;
  out["certified_count"] = result.found.size();
  out["truncated"] = result.truncated;
  Json frontier = Json::array();
  for (const auto& row : result.frontier) {
    Json r;
    r["gamma"] = row.gamma.to_string(p);
    r["n_max"] = row.n_max;
    r["bound_rhs"] = row.bound_rhs.to_string(p);
    r["holds"] = row.holds;
    frontier.push_back(std::move(r));
  }
  out["frontier"] = std::move(frontier);
  Json found = Json::array();
  for (const auto& c : result.found) found.push_back(to_json(c));
  out["found"] = std::move(found);
  Json counter = Json::array();
  for (const auto& c : result.counterexamples) counter.push_back(to_json(c));
  out["counterexamples"] = std::move(counter);
  return out;
}

Json to_json(std::span<const SearchResult> results) {
  Json out = Json::array();
  for (const auto& r : results) out.push_back(to_json(r));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
}

}  // namespace padiceq
