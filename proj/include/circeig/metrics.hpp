#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "circeig/circulant.hpp"
#include "circeig/sequences.hpp"
#include "circeig/toeplitz.hpp"

namespace circeig {

/// Test function applied to eigenvalues in equal-distribution statistics.
struct TestFunction {
  enum class Kind { identity, log, power, table };

  Kind kind = Kind::identity;
  double exponent = 1.0;  // Kind::power
  // Kind::table: piecewise-linear interpolation through (x, y) knots with
  // strictly increasing x; constant extension outside the knots.
  std::vector<std::pair<double, double>> knots;

  static TestFunction identity() { return {}; }
  static TestFunction log() { return {Kind::log, 0.0, {}}; }
  static TestFunction power(double p) { return {Kind::power, p, {}}; }
  static TestFunction table(std::vector<std::pair<double, double>> knots);

  /// Throws DomainError when x is outside the function's domain.
  double operator()(double x) const;
};

/// Right-continuous step CDF: F(a) = steps[i] for the largest i with
/// jumps[i] <= a, and 0 below jumps[0].
struct CdfCurve {
  std::vector<double> jumps;  // strictly increasing
  std::vector<double> steps;  // non-decreasing, last == 1

  double operator()(double alpha) const;
};

struct ErrorReport {
  std::size_t n = 0;
  Scheme scheme = Scheme::cesaro;
  double sup_error = 0.0;
  std::vector<double> per_index_errors;
  std::pair<double, double> extreme_errors;  // (|lambda_max gap|, |lambda_min gap|)
  double eq_dist_stat = 0.0;
};

/// max_l |u_desc[l] - v_desc[l]|. Throws LengthError on size mismatch.
double sup_error(const Spectrum& u, const Spectrum& v);

/// (1/N) sum_l theta(u_desc[l]) - theta(v_desc[l]).
double eq_dist_stat(const Spectrum& u, const Spectrum& v, const TestFunction& theta);

/// Exact step CDF of the eigenvalue multiset.
CdfCurve spectrum_cdf(const Spectrum& s);

/// Empirical CDF of the symbol sampled at the midpoints (i + 1/2)/grid.
CdfCurve symbol_cdf(const SymbolSpec& sym, std::size_t grid);

/// sup_a |F(a) - G(a)|.
double cdf_sup_gap(const CdfCurve& f, const CdfCurve& g);

/// Per-index comparison of an exact spectrum with a circulant spectrum.
ErrorReport make_error_report(const Spectrum& exact, const Spectrum& approx,
                              Scheme scheme,
                              const TestFunction& theta = TestFunction::identity());

inline constexpr double kDefaultPdTolerance = 1e-3;

/// lambda_max / lambda_min of the Cesaro circulant, a lower bound on the
/// condition number of H_N. Throws NotPositiveDefiniteError when the smallest
/// Cesaro eigenvalue is <= pd_tolerance * |lambda_max|.
double condition_estimate(const HermitianSequence& seq, std::size_t n,
                          double pd_tolerance = kDefaultPdTolerance);

/// True iff max_l |sort(u)[l] - sort(v)[l]| <= max_l |u[l] - v[l]|.
bool sorted_alignment_check(std::span<const double> u, std::span<const double> v);

/// True iff for every 1 <= r' <= r the largest drop between sorted elements r'
/// apart is bounded by the largest |u[l] - u[l + r'']| over 1 <= r'' <= r.
bool sorted_gap_check(std::span<const double> u, std::size_t r);

}  // namespace circeig
