#include "padiceq/search.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include "padiceq/errors.hpp"

namespace padiceq {

namespace {

// Runs fn(chunk_index) for chunk_index in [0, chunks) on up to `workers`
// threads. Each chunk writes only to its own output slot.
template <typename Fn>
void parallel_chunks(std::size_t chunks, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || chunks <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::vector<std::jthread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t c = w; c < chunks; c += workers) fn(c);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw LimitError("search space too large");
  }
  return r;
}

}  // namespace

SearchSpace SearchSpace::with_defaults(Prime p, std::size_t d, long numerator_bound) {
  SearchSpace s{p, d, numerator_bound, {}, Rational(1), std::nullopt, 16, 0};
  s.denominators = {BigInt(1), p.value(), p.value() * p.value()};
  return s;
}

std::size_t SearchSpace::candidate_count() const {
  return checked_pow(static_cast<std::size_t>(2 * numerator_bound + 1), d) * denominators.size();
}

std::vector<Vector> enumerate_unit_vectors(const SearchSpace& space, unsigned workers) {
  if (space.d == 0) throw DomainError("search dimension must be positive");
  if (space.numerator_bound < 0) throw DomainError("numerator bound must be non-negative");
  if (space.denominators.empty()) throw DomainError("empty search space: no denominators");
  for (const auto& den : space.denominators) {
    if (den <= 0) throw DomainError("denominators must be positive");
  }
  const std::size_t width = static_cast<std::size_t>(2 * space.numerator_bound + 1);
  const std::size_t per_den = checked_pow(width, space.d);
  const std::size_t total = per_den * space.denominators.size();

  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<std::vector<Vector>> partial(chunks);

  parallel_chunks(chunks, workers, [&](std::size_t c) {
    const std::size_t begin = c * kChunk;
    const std::size_t end = std::min(total, begin + kChunk);
    std::vector<long> nums(space.d);
    for (std::size_t idx = begin; idx < end; ++idx) {
      const BigInt& den = space.denominators[idx / per_den];
      std::size_t rest = idx % per_den;
      // Lexicographic over numerators: the first coordinate varies slowest.
      for (std::size_t i = space.d; i-- > 0;) {
        nums[i] = static_cast<long>(rest % width) - space.numerator_bound;
        rest /= width;
      }
      // <v, v> = a  <=>  sum n_i^2 = a * den^2.
      BigInt sum = 0;
      for (long n : nums) sum += n * n;
      if (Rational(sum) != space.target_a * Rational(BigInt(den * den))) continue;
      Vector v(space.d);
      for (std::size_t i = 0; i < space.d; ++i) v[i] = Rational(BigInt(nums[i]), den);
      partial[c].push_back(std::move(v));
    }
  });

  std::vector<Vector> out;
  for (auto& part : partial) {
    for (auto& v : part) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vector> line_representatives(std::span<const Vector> vectors) {
  std::vector<Vector> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) {
    Vector neg = -v;
    out.push_back(neg < v ? std::move(neg) : v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t CompatibilityGraph::edge_count() const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) e += adjacent(i, j) ? 1 : 0;
  }
  return e;
}

CompatibilityGraph build_compatibility_graph(std::span<const Vector> vectors, const PadicAbs& gamma, const Prime& p) {
  CompatibilityGraph g;
  g.vertices = line_representatives(vectors);
  const std::size_t n = g.vertices.size();
  g.adjacency.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (abs_p(inner_product(g.vertices[i], g.vertices[j]), p) == gamma) {
        g.adjacency[i][j] = 1;
        g.adjacency[j][i] = 1;
      }
    }
  }
  return g;
}

CliqueList grow_cliques(const CompatibilityGraph& graph, std::size_t max_n) {
  CliqueList out;
  if (max_n == 0) return out;
  const std::size_t n = graph.size();
  std::vector<std::size_t> current;

  // Bron-Kerbosch without pivoting; candidates and excluded kept sorted.
  auto recurse = [&](auto&& self, std::vector<std::size_t> cand, std::vector<std::size_t> excl) -> void {
    if (cand.empty() && excl.empty()) {
      out.cliques.push_back(current);
      return;
    }
    if (current.size() == max_n) {
      if (!cand.empty()) out.truncated = true;
      out.cliques.push_back(current);
      return;
    }
    while (!cand.empty()) {
      const std::size_t v = cand.front();
      std::vector<std::size_t> next_cand;
      std::vector<std::size_t> next_excl;
      for (std::size_t u : cand) {
        if (u != v && graph.adjacent(u, v)) next_cand.push_back(u);
      }
      for (std::size_t u : excl) {
        if (graph.adjacent(u, v)) next_excl.push_back(u);
      }
      current.push_back(v);
      self(self, std::move(next_cand), std::move(next_excl));
      current.pop_back();
      cand.erase(cand.begin());
      excl.insert(std::upper_bound(excl.begin(), excl.end(), v), v);
    }
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  if (n > 0) recurse(recurse, all, {});
  for (auto& c : out.cliques) std::sort(c.begin(), c.end());
  std::sort(out.cliques.begin(), out.cliques.end());
  out.cliques.erase(std::unique(out.cliques.begin(), out.cliques.end()), out.cliques.end());
  return out;
}

CliqueList enumerate_cliques(const CompatibilityGraph& graph, std::size_t min_size, std::size_t max_n,
                             std::size_t max_count) {
  CliqueList out;
  const std::size_t n = graph.size();
  std::vector<std::size_t> current;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (current.size() >= min_size) {
      if (out.cliques.size() >= max_count) {
        out.truncated = true;
        return;
      }
      out.cliques.push_back(current);
    }
    for (std::size_t v = start; v < n; ++v) {
      if (!std::all_of(current.begin(), current.end(), [&](std::size_t u) { return graph.adjacent(u, v); })) continue;
      if (current.size() == max_n) {
        out.truncated = true;
        return;
      }
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
      if (out.truncated && out.cliques.size() >= max_count) return;
    }
  };
  extend(extend, 0);
  return out;
}

SearchResult run_search(const SearchSpace& space, const SearchOptions& options) {
  SearchResult result{.space = space};
  result.candidate_count = space.candidate_count();
  const std::vector<Vector> units = enumerate_unit_vectors(space, options.workers);
  result.unit_vector_count = units.size();
  const std::vector<Vector> lines = line_representatives(units);
  result.line_count = lines.size();

  std::vector<PadicAbs> gammas;
  if (space.target_gamma) {
    gammas.push_back(*space.target_gamma);
  } else {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) gammas.push_back(abs_p(inner_product(lines[i], lines[j]), space.p));
    }
    std::sort(gammas.begin(), gammas.end());
    gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());
  }

  const std::size_t max_n = std::max<std::size_t>(space.max_n, 2);
  bool injected = false;
  for (const auto& gamma : gammas) {
    const CompatibilityGraph graph = build_compatibility_graph(lines, gamma, space.p);
    const CliqueList cliques = enumerate_cliques(graph, 2, max_n, options.max_cliques_per_gamma);
    result.truncated = result.truncated || cliques.truncated;
    result.clique_count += cliques.cliques.size();

    constexpr std::size_t kChunk = 64;
    const std::size_t chunks = (cliques.cliques.size() + kChunk - 1) / kChunk;
    std::vector<std::vector<Certificate>> partial(chunks);
    parallel_chunks(chunks, options.workers, [&](std::size_t c) {
      const std::size_t end = std::min(cliques.cliques.size(), (c + 1) * kChunk);
      for (std::size_t k = c * kChunk; k < end; ++k) {
        std::vector<Vector> vs;
        for (std::size_t idx : cliques.cliques[k]) vs.push_back(graph.vertices[idx]);
        Configuration cfg(space.p, std::move(vs), space.target_a);
        Certificate cert = certify(cfg, options.certify);
        if (cert.certified) partial[c].push_back(std::move(cert));
      }
    });

    std::size_t n_max = 0;
    for (auto& part : partial) {
      for (auto& cert : part) {
        bool violated = std::any_of(cert.bounds.begin(), cert.bounds.end(), [](const BoundReport& r) {
          return is_padic(r.name) && r.hypotheses_verified && !r.holds;
        });
        if (options.corrupt_bound_comparison && !injected) {
          violated = true;
          injected = true;
        }
        if (violated) result.counterexamples.push_back(cert);
        n_max = std::max(n_max, cert.config.n());
        result.found.push_back(std::move(cert));
      }
    }
    if (n_max > 0) {
      const BoundReport rel = bound_padic_relative(n_max, space.d, gamma, space.p);
      result.frontier.push_back({gamma, n_max, std::get<PadicAbs>(rel.rhs), rel.holds});
    }
  }
  return result;
}

std::string frontier_table(std::span<const SearchResult> results, bool header) {
  std::ostringstream os;
  if (header) os << "p\td\tgamma\tn_max\tbound_rhs\tholds\n";
  for (const auto& r : results) {
    for (const auto& row : r.frontier) {
      os << r.space.p.to_string() << '\t' << r.space.d << '\t' << row.gamma.to_string(r.space.p) << '\t' << row.n_max
         << '\t' << row.bound_rhs.to_string(r.space.p) << '\t' << (row.holds ? "true" : "false") << '\n';
    }
  }
  return os.str();
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

Rational random_rational(SplitMix64& rng, const Prime& p, long numerator_bound, int max_exponent) {
  const long u = static_cast<long>(rng.uniform(-numerator_bound, numerator_bound));
  const long w = static_cast<long>(rng.uniform(1, std::max(1L, numerator_bound)));
  const int k = static_cast<int>(rng.uniform(-max_exponent, max_exponent));
  BigInt pk;
  mpz_pow_ui(pk.get_mpz_t(), p.value().get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  Rational r{BigInt(u), BigInt(w)};
  return k >= 0 ? r * Rational(pk) : r / Rational(pk);
}

Vector random_vector(SplitMix64& rng, const Prime& p, std::size_t d, long numerator_bound, int max_exponent) {
  Vector v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = random_rational(rng, p, numerator_bound, max_exponent);
  return v;
}

std::vector<Vector> sample_vectors(const SearchSpace& space, std::size_t count) {
  SplitMix64 rng(space.seed);
  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    SplitMix64 stream = rng.split();
    Vector v(space.d);
    for (std::size_t i = 0; i < space.d; ++i) {
      const long u = static_cast<long>(stream.uniform(-space.numerator_bound, space.numerator_bound));
      const auto k = static_cast<unsigned long>(stream.uniform(0, 2));
      BigInt pk;
      mpz_pow_ui(pk.get_mpz_t(), space.p.value().get_mpz_t(), k);
      v[i] = Rational(BigInt(u), pk);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace padiceq
