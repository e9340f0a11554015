#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "padiceq/equiangular.hpp"

namespace padiceq {

/// A bounded lattice of candidate vectors (n_1, ..., n_d) / den with
/// |n_i| <= numerator_bound and den drawn from `denominators`.
struct SearchSpace {
  Prime p;
  std::size_t d = 1;
  long numerator_bound = 1;
  std::vector<BigInt> denominators;
  Rational target_a = Rational(1);
  std::optional<PadicAbs> target_gamma;
  std::size_t max_n = 16;
  std::uint64_t seed = 0;

  /// Denominators default to {1, p, p^2}.
  static SearchSpace with_defaults(Prime p, std::size_t d, long numerator_bound);
  /// (2B+1)^d * |denominators|.
  std::size_t candidate_count() const;
};

struct SearchOptions {
  unsigned workers = 1;
  /// Test hook: flips the outcome of the bound comparison for the first
  /// certified configuration so the counterexample path can be exercised.
  bool corrupt_bound_comparison = false;
  std::size_t max_cliques_per_gamma = 2'000'000;
  CertifyOptions certify;
};

/// Lattice vectors with <v, v> = target_a, deduplicated and sorted
/// lexicographically. Work is split into contiguous chunks over `workers`.
std::vector<Vector> enumerate_unit_vectors(const SearchSpace& space, unsigned workers = 1);

/// One representative per line: of v and -v the lexicographically smaller
/// is kept. Output sorted.
std::vector<Vector> line_representatives(std::span<const Vector> vectors);

struct CompatibilityGraph {
  std::vector<Vector> vertices;
  std::vector<std::vector<char>> adjacency;

  std::size_t size() const { return vertices.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i][j] != 0; }
  std::size_t edge_count() const;
};

/// Vertices are the line representatives of `vectors`; u ~ v iff |<u, v>|_p = gamma.
CompatibilityGraph build_compatibility_graph(std::span<const Vector> vectors, const PadicAbs& gamma, const Prime& p);

struct CliqueList {
  std::vector<std::vector<std::size_t>> cliques;
  /// Some clique of size max_n could still be extended, or a count cap was hit.
  bool truncated = false;
};

/// Maximal cliques (capped at max_n vertices), sorted lexicographically.
CliqueList grow_cliques(const CompatibilityGraph& graph, std::size_t max_n);

/// Every clique with min_size <= size <= max_n, in lexicographic order.
CliqueList enumerate_cliques(const CompatibilityGraph& graph, std::size_t min_size, std::size_t max_n,
                             std::size_t max_count);

struct FrontierRow {
  PadicAbs gamma;
  std::size_t n_max = 0;
  /// Right-hand side of |n|^2 <= |d| max(|n|, gamma^2) at n = n_max.
  PadicAbs bound_rhs;
  bool holds = false;
};

struct SearchResult {
  SearchSpace space;
  std::size_t candidate_count = 0;
  std::size_t unit_vector_count = 0;
  std::size_t line_count = 0;
  std::size_t clique_count = 0;
  std::vector<Certificate> found = {};
  std::vector<FrontierRow> frontier = {};
  std::vector<Certificate> counterexamples = {};
  bool truncated = false;
};

/// enumerate -> graph per attainable gamma -> all cliques -> certify.
SearchResult run_search(const SearchSpace& space, const SearchOptions& options = {});

/// Tab-separated frontier rows (p, d, gamma, n_max, bound_rhs, holds).
std::string frontier_table(std::span<const SearchResult> results, bool header = true);

/// SplitMix64: a small splittable generator; split() derives an
/// independent stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL); }

 private:
  std::uint64_t state_;
};

/// (u / w) * p^k with |u| <= numerator_bound, 1 <= w <= numerator_bound and
/// |k| <= max_exponent.
Rational random_rational(SplitMix64& rng, const Prime& p, long numerator_bound, int max_exponent);
Vector random_vector(SplitMix64& rng, const Prime& p, std::size_t d, long numerator_bound, int max_exponent);

/// Randomized mode: `count` vectors with entries u / p^k, 0 <= k <= 2.
/// Used for property-test corpora only, never for frontier claims.
std::vector<Vector> sample_vectors(const SearchSpace& space, std::size_t count);

}  // namespace padiceq
