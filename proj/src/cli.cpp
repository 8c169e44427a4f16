#include "circeig/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "circeig/error.hpp"
#include "circeig/format.hpp"
#include "circeig/metrics.hpp"
#include "circeig/toeplitz.hpp"

namespace circeig::cli {

namespace {

constexpr std::string_view kAllSchemes = "all";

std::vector<Scheme> all_schemes() {
  return {Scheme::fourier, Scheme::strang, Scheme::cesaro};
}

bool scheme_less(Scheme a, Scheme b) { return scheme_name(a) < scheme_name(b); }

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ValidationError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

}  // namespace

SymbolPair load_source(const SourceSpec& source) {
  const int given = static_cast<int>(!source.symbol.empty()) +
                    static_cast<int>(!source.coeffs.empty()) +
                    static_cast<int>(!source.seq.empty());
  if (given != 1) {
    throw ValidationError("give exactly one of --symbol, --coeffs, --seq");
  }
  if (!source.symbol.empty()) return make_symbol(source.symbol);
  if (!source.coeffs.empty()) return make_custom(source.coeffs);
  return parse_inline_sequence(source.seq);
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size() || v == 0) {
      throw ValidationError("N values must be positive integers: '" + item + "'");
    }
    if (!out.empty() && v <= out.back()) {
      throw ValidationError("N values must be strictly increasing");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError("empty N list");
  return out;
}

std::vector<SweepRow> run_sweep(const HermitianSequence& seq, const SweepConfig& config) {
  if (config.n_list.empty()) throw ValidationError("sweep needs at least one N");
  if (config.schemes.empty()) throw ValidationError("sweep needs at least one scheme");
  for (std::size_t i = 0; i < config.n_list.size(); ++i) {
    if (config.n_list[i] == 0 || (i > 0 && config.n_list[i] <= config.n_list[i - 1])) {
      throw ValidationError("N values must be positive and strictly increasing");
    }
  }
  if (!config.include_exact) {
    throw ValidationError("sweep errors are measured against the exact spectrum");
  }
  if (config.n_list.back() > kMaxExactSweep) {
    throw ValidationError("sweep with the exact oracle is limited to N <= " +
                          std::to_string(kMaxExactSweep));
  }
  std::vector<Scheme> schemes = config.schemes;
  std::sort(schemes.begin(), schemes.end(), scheme_less);
  schemes.erase(std::unique(schemes.begin(), schemes.end()), schemes.end());

  const std::size_t count = config.n_list.size();
  std::vector<std::vector<SweepRow>> buffered(count);
  std::vector<std::string> failures(count);
  const auto jobs = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long job = 0; job < jobs; ++job) {
    const auto i = static_cast<std::size_t>(job);
    try {
      const std::size_t n = config.n_list[i];
      const Spectrum exact = exact_eigs(build_toeplitz(seq, n));
      for (Scheme s : schemes) {
        const ErrorReport r = make_error_report(exact, circulant_eigs(make_row(s, seq, n)), s);
        buffered[i].push_back({n, s, r.sup_error, r.extreme_errors.first,
                               r.extreme_errors.second, r.eq_dist_stat});
      }
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  }
  for (const auto& f : failures) {
    if (!f.empty()) throw Error(f);
  }
  std::vector<SweepRow> rows;
  for (auto& chunk : buffered) rows.insert(rows.end(), chunk.begin(), chunk.end());
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "N,scheme,sup_error,max_eig_error,min_eig_error,eq_dist_identity\n";
  for (const auto& r : rows) {
    out << r.n << ',' << scheme_name(r.scheme) << ',' << format_double(r.sup_error) << ','
        << format_double(r.max_eig_error) << ',' << format_double(r.min_eig_error) << ','
        << format_double(r.eq_dist_identity) << '\n';
  }
}

namespace {

std::vector<Scheme> parse_scheme_list(const std::string& text) {
  if (text == kAllSchemes) return all_schemes();
  std::vector<Scheme> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scheme(item));
  if (out.empty()) throw ValidationError("empty scheme list");
  return out;
}

void cmd_eigs(const SourceSpec& source, std::size_t n, const std::string& scheme,
              std::ostream& out) {
  if (n == 0) throw ValidationError("--n must be positive");
  const bool exact = scheme == "exact";
  std::vector<Scheme> schemes;
  if (!exact) schemes = parse_scheme_list(scheme);
  if (exact && n > kMaxExactSingle) {
    throw ValidationError("exact eigenvalues are limited to N <= " +
                          std::to_string(kMaxExactSingle));
  }
  const SymbolPair pair = load_source(source);
  std::vector<std::vector<double>> columns;
  if (exact) {
    columns.push_back(exact_eigs(build_toeplitz(pair.sequence, n)).descending());
    out << "l,lambda_desc\n";
  } else {
    for (Scheme s : schemes) {
      columns.push_back(circulant_eigs(make_row(s, pair.sequence, n)).descending());
    }
    if (schemes.size() == 1) {
      out << "l,lambda_desc\n";
    } else {
      out << 'l';
      for (Scheme s : schemes) out << ',' << scheme_name(s);
      out << '\n';
    }
  }
  for (std::size_t l = 0; l < n; ++l) {
    out << l;
    for (const auto& col : columns) out << ',' << format_double(col[l]);
    out << '\n';
  }
}

void cmd_condest(const SourceSpec& source, std::size_t n, bool verify, std::ostream& out) {
  if (n == 0) throw ValidationError("--n must be positive");
  if (verify && n > kMaxVerify) {
    throw ValidationError("--verify is limited to N <= " + std::to_string(kMaxVerify));
  }
  const SymbolPair pair = load_source(source);
  const double estimate = condition_estimate(pair.sequence, n);
  if (!verify) {
    out << "N,estimate\n" << n << ',' << format_double(estimate) << '\n';
    return;
  }
  const Spectrum exact = exact_eigs(build_toeplitz(pair.sequence, n));
  if (!(exact.min() > 0.0)) {
    throw NotPositiveDefiniteError("H_N is not positive definite (smallest eigenvalue " +
                                   std::to_string(exact.min()) + ")");
  }
  const double kappa = exact.max() / exact.min();
  out << "N,estimate,oracle_kappa,relative_gap\n"
      << n << ',' << format_double(estimate) << ',' << format_double(kappa) << ','
      << format_double((kappa - estimate) / kappa) << '\n';
}

void cmd_dirichlet(std::size_t n, std::size_t grid, std::ostream& out) {
  if (n == 0) throw ValidationError("--n must be positive");
  if (grid == 0) throw ValidationError("--grid must be positive");
  const double total = dirichlet_energy(n, 0.0, 1.0, grid);
  const double lobe = dirichlet_energy(n, 0.0, 1.0 / static_cast<double>(n), grid);
  out << "N,grid,total_energy,main_lobe_energy,main_lobe_ratio\n"
      << n << ',' << grid << ',' << format_double(total) << ',' << format_double(lobe)
      << ',' << format_double(lobe / static_cast<double>(n)) << '\n';
}

void add_source_options(CLI::App* cmd, SourceSpec& source) {
  cmd->add_option("--symbol", source.symbol, "built-in family, e.g. triangular:0.25");
  cmd->add_option("--coeffs", source.coeffs, "coefficient file (#toeplitz-coeffs v1)");
  cmd->add_option("--seq", source.seq, "inline real coefficients, e.g. h0=2,h1=1");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circulant eigenvalue estimates for Hermitian Toeplitz matrices", "circeig"};
  app.require_subcommand(1);

  SourceSpec source;
  std::size_t n = 0;
  std::string n_list;
  std::string scheme;
  std::string out_path;
  bool verify = false;
  std::size_t grid = std::size_t{1} << 16;

  auto* eigs = app.add_subcommand("eigs", "eigenvalues in descending order");
  add_source_options(eigs, source);
  eigs->add_option("--n", n, "matrix size")->required();
  eigs->add_option("--scheme", scheme, "fourier|strang|cesaro|exact|all")
      ->default_val("cesaro");
  eigs->add_option("--out", out_path, "output path (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "eigenvalue errors versus N");
  add_source_options(sweep, source);
  sweep->add_option("--n-list", n_list, "comma-separated increasing sizes")->required();
  sweep->add_option("--scheme", scheme, "fourier|strang|cesaro|all or a comma list")
      ->default_val("all");
  sweep->add_option("--out", out_path, "output path (default stdout)");

  auto* condest = app.add_subcommand("condest", "condition number estimate");
  add_source_options(condest, source);
  condest->add_option("--n", n, "matrix size")->required();
  condest->add_flag("--verify", verify, "compare against the dense oracle");
  condest->add_option("--out", out_path, "output path (default stdout)");

  auto* dir = app.add_subcommand("dirichlet", "Dirichlet kernel energy check");
  dir->add_option("--n", n, "kernel order")->required();
  dir->add_option("--grid", grid, "quadrature panels")->default_val(grid);
  dir->add_option("--out", out_path, "output path (default stdout)");

  auto* symbols = app.add_subcommand("symbols", "built-in symbol families");
  auto* list = symbols->add_subcommand("list", "list families");
  symbols->require_subcommand(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    Sink sink(out_path, out);
    std::ostream& os = sink.get();
    if (eigs->parsed()) {
      cmd_eigs(source, n, scheme, os);
    } else if (sweep->parsed()) {
      SweepConfig config;
      config.source = source;
      config.n_list = parse_n_list(n_list);
      config.schemes = parse_scheme_list(scheme);
      const SymbolPair pair = load_source(source);
      write_sweep_csv(os, run_sweep(pair.sequence, config));
    } else if (condest->parsed()) {
      cmd_condest(source, n, verify, os);
    } else if (dir->parsed()) {
      cmd_dirichlet(n, grid, os);
    } else if (list->parsed()) {
      for (const auto& [name, desc] : symbol_families()) os << name << '\t' << desc << '\n';
    }
    os.flush();
  } catch (const NotPositiveDefiniteError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const NotHermitianError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace circeig::cli
