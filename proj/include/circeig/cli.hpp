#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "circeig/circulant.hpp"
#include "circeig/sequences.hpp"

namespace circeig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

inline constexpr std::size_t kMaxExactSingle = 4096;
inline constexpr std::size_t kMaxExactSweep = 2048;
inline constexpr std::size_t kMaxVerify = 2048;

/// Where the generating sequence comes from; exactly one field is set.
struct SourceSpec {
  std::string symbol;  // --symbol family:params
  std::string coeffs;  // --coeffs path
  std::string seq;     // --seq h0=..,h1=..
};

SymbolPair load_source(const SourceSpec& source);

struct SweepConfig {
  SourceSpec source;
  std::vector<std::size_t> n_list;  // positive, strictly increasing
  std::vector<Scheme> schemes;      // nonempty
  bool include_exact = true;
  std::string out;                  // empty means stdout
};

struct SweepRow {
  std::size_t n = 0;
  Scheme scheme = Scheme::cesaro;
  double sup_error = 0.0;
  double max_eig_error = 0.0;
  double min_eig_error = 0.0;
  double eq_dist_identity = 0.0;
};

/// Rows in ascending N, then scheme name order. Distinct N values are
/// evaluated concurrently.
std::vector<SweepRow> run_sweep(const HermitianSequence& seq, const SweepConfig& config);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Parses "64,128,256" into a strictly increasing list of positive sizes.
std::vector<std::size_t> parse_n_list(const std::string& text);

/// Entry point behind the `circeig` executable. `args` excludes the program
/// name. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circeig::cli
