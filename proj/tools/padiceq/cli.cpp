#include "padiceq/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "padiceq/bounds.hpp"
#include "padiceq/equiangular.hpp"
#include "padiceq/errors.hpp"
#include "padiceq/json_io.hpp"
#include "padiceq/search.hpp"

#ifndef PADICEQ_VERSION
#define PADICEQ_VERSION "0.0.0"
#endif

namespace padiceq::cli {

namespace {

std::string relation(const BoundValue& lhs, const BoundValue& rhs) {
  std::strong_ordering c = std::strong_ordering::equal;
  if (const auto* a = std::get_if<PadicAbs>(&lhs)) {
    c = *a <=> std::get<PadicAbs>(rhs);
  } else {
    c = std::get<Rational>(lhs) <=> std::get<Rational>(rhs);
  }
  if (c < 0) return "<";
  if (c > 0) return ">";
  return "=";
}

void print_reports(std::ostream& out, const std::vector<BoundReport>& reports, const Prime& p) {
  out << "bound\tlhs\trhs\trelation\tholds\tsub_case\tdetail\n";
  for (const auto& r : reports) {
    std::string detail;
    if (r.sub_case_holds) detail = std::string("sub_case_holds=") + (*r.sub_case_holds ? "true" : "false");
    if (r.implied_n_max) detail = "implied_n_max=" + r.implied_n_max->to_string();
    if (!r.note.empty()) detail += (detail.empty() ? "" : "; ") + r.note;
    out << to_string(r.name) << '\t' << to_string(r.lhs, p) << '\t' << to_string(r.rhs, p) << '\t'
        << relation(r.lhs, r.rhs) << '\t' << (r.holds ? "true" : "false") << '\t' << to_string(r.sub_case) << '\t'
        << (detail.empty() ? "-" : detail) << '\n';
  }
}

struct CertifyArgs {
  std::string path;
  std::size_t char_poly_limit = kDefaultCharPolyLimit;
  int hensel_precision = kDefaultHenselPrecision;
};

int cmd_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<Configuration> cfg;
  try {
    cfg = configuration_from_json(read_json_file(args.path));
    if (cfg->n() < 2) throw ParseError("vectors: need at least two lines");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  try {
    const Certificate cert = certify(*cfg, {args.char_poly_limit, args.hensel_precision});
    out << to_json(cert).dump(2) << '\n';
    return cert.certified ? kOk : kNotEquiangular;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

struct BoundArgs {
  std::string p;
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::string gamma;
  std::string a;
  std::string gamma2;
  bool classical = false;
};

int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<BoundReport> reports;
  std::optional<Prime> prime;
  try {
    if (args.n == 0 || args.d == 0) throw ParseError("--n and --d must be positive");
    if (args.classical) {
      if (args.gamma2.empty()) throw ParseError("--classical needs --gamma2");
      const Rational g2 = Rational::parse(args.gamma2);
      reports.push_back(bound_classical_relative(args.n, args.d, g2));
      reports.push_back(bound_classical_gerzon(args.n, args.d));
      prime = Prime(2);
    } else {
      if (args.p.empty()) throw ParseError("--p is required");
      if (args.gamma.empty()) throw ParseError("--gamma is required");
      prime = Prime::parse(args.p);
      const PadicAbs gamma = PadicAbs::parse(args.gamma, *prime);
      reports.push_back(bound_padic_relative(args.n, args.d, gamma, *prime));
      if (!args.a.empty()) {
        const Rational a = Rational::parse(args.a);
        if (a.is_zero()) throw DomainError("--a must be nonzero");
        reports.push_back(bound_ga_relative(args.n, args.d, gamma, a, *prime));
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  print_reports(out, reports, *prime);
  for (const auto& r : reports) {
    if (!r.holds) return kBoundFails;
  }
  return kOk;
}

struct SearchArgs {
  std::string path;
  unsigned workers = 1;
  std::string json_path;
  std::string table_path;
};

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  SearchJob job;
  try {
    job = search_job_from_json(read_json_file(args.path));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  std::vector<SearchResult> results;
  try {
    SearchOptions options;
    options.workers = args.workers;
    options.corrupt_bound_comparison = job.fault_injection;
    for (const auto& space : job.spaces) {
      results.push_back(run_search(space, options));
      options.corrupt_bound_comparison = options.corrupt_bound_comparison && results.back().counterexamples.empty();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  std::ostringstream table;
  table << frontier_table(results);
  for (const auto& r : results) {
    if (r.unit_vector_count == 0) {
      table << "# p=" << r.space.p.to_string() << " d=" << r.space.d << ": no candidates\n";
    }
    if (r.truncated) table << "# p=" << r.space.p.to_string() << " d=" << r.space.d << ": truncated at max_n\n";
  }
  out << table.str();

  if (!args.table_path.empty()) {
    std::ofstream f(args.table_path, std::ios::binary);
    f << table.str();
  }
  if (!args.json_path.empty()) {
    std::ofstream f(args.json_path, std::ios::binary);
    f << to_json(std::span<const SearchResult>(results)).dump(2) << '\n';
  }

  std::size_t counterexamples = 0;
  for (const auto& r : results) counterexamples += r.counterexamples.size();
  if (counterexamples > 0) {
    err << "!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!\n"
        << "!!! COUNTEREXAMPLE: " << counterexamples
        << " certified configuration(s) violate a p-adic bound\n"
        << "!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!\n";
    for (const auto& r : results) {
      for (const auto& c : r.counterexamples) err << to_json(c.config).dump() << '\n';
    }
    return kCounterexample;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify p-adic equiangular lines and evaluate their bounds", "padiceq"};
  app.require_subcommand(1);

  CertifyArgs certify_args;
  auto* certify_cmd = app.add_subcommand("certify", "Certify a configuration file; prints a certificate as JSON");
  certify_cmd->add_option("path", certify_args.path, "Configuration JSON file")->required();
  certify_cmd->add_option("--char-poly-limit", certify_args.char_poly_limit, "Maximum dimension for char_poly");
  certify_cmd->add_option("--hensel-precision", certify_args.hensel_precision, "p-adic digits for Hensel lifting")
      ->check(CLI::Range(1, 4096));

  BoundArgs bound_args;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate relative bounds from parameters");
  bound_cmd->add_option("--p", bound_args.p, "Prime");
  bound_cmd->add_option("--n", bound_args.n, "Number of lines")->required();
  bound_cmd->add_option("--d", bound_args.d, "Dimension")->required();
  bound_cmd->add_option("--gamma", bound_args.gamma, "Common angle as \"0\" or \"p^e\"");
  bound_cmd->add_option("--a", bound_args.a, "Common self-product a (rational)");
  bound_cmd->add_flag("--classical", bound_args.classical, "Evaluate the real bounds instead");
  bound_cmd->add_option("--gamma2", bound_args.gamma2, "Squared real angle (rational in [0,1]) for --classical");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Run a search job; prints the frontier table");
  search_cmd->add_option("path", search_args.path, "Search job JSON file")->required();
  search_cmd->add_option("--workers", search_args.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
  search_cmd->add_option("--json", search_args.json_path, "Write the full result JSON here");
  search_cmd->add_option("--table", search_args.table_path, "Also write the frontier table here");

  auto* version_cmd = app.add_subcommand("version", "Print the version");

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (certify_cmd->parsed()) return cmd_certify(certify_args, out, err);
  if (bound_cmd->parsed()) return cmd_bound(bound_args, out, err);
  if (search_cmd->parsed()) return cmd_search(search_args, out, err);
  if (version_cmd->parsed()) {
    out << "padiceq " << PADICEQ_VERSION << '\n';
    return kOk;
  }
  return kInputError;
}

}  // namespace padiceq::cli
