#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "padiceq/equiangular.hpp"
#include "padiceq/polynomial.hpp"
#include "padiceq/search.hpp"

namespace padiceq {

using Json = nlohmann::ordered_json;

// Rationals and absolute values are encoded as strings ("-3/5", "5^-2").
// Decoders are strict: unknown fields are rejected and every ParseError
// names the offending field path.

Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Polynomial& f);
Vector vector_from_json(const Json& j, const std::string& where = "vector");
Matrix matrix_from_json(const Json& j, const std::string& where = "matrix");
Polynomial polynomial_from_json(const Json& j, const std::string& where = "polynomial");

/// {"p": "5", "d": 2, "a": "1", "vectors": [["3/5", "4/5"], ["1", "0"]], "gamma": "5^1"}
/// "d", "a" and "gamma" are optional on input. A "mode": "certify" field is
/// accepted so the same file can serve as a job file.
Json to_json(const Configuration& cfg);
Configuration configuration_from_json(const Json& j);

Json to_json(const BoundReport& r, const Prime& p);
BoundReport bound_report_from_json(const Json& j, const Prime& p);

Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

/// Search job: {"mode": "search", "p": 5 | [2, 3, 5], "d": 2 | [1, 2, 3],
/// "numerator_bound": 6, "denominators": [1, 5, 25], "a": "1",
/// "gamma": "5^1", "max_n": 16, "seed": 0, "fault_injection": false}.
/// Array-valued "p"/"d" expand into the ordered product of spaces.
struct SearchJob {
  std::vector<SearchSpace> spaces;
  bool fault_injection = false;
};
SearchJob search_job_from_json(const Json& j);

Json to_json(const SearchSpace& space);
Json to_json(const SearchResult& result);
Json to_json(std::span<const SearchResult> results);

/// Reads and parses a JSON file; ParseError carries the path.
Json read_json_file(const std::string& path);

}  // namespace padiceq
