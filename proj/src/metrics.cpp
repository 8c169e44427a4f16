#include "circeig/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "circeig/error.hpp"

namespace circeig {

namespace {

void check_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw LengthError(std::string(what) + ": length mismatch");
}

CdfCurve step_cdf(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  CdfCurve cdf;
  const double total = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i + 1 < samples.size() && samples[i + 1] == samples[i]) continue;
    cdf.jumps.push_back(samples[i]);
    cdf.steps.push_back(static_cast<double>(i + 1) / total);
  }
  return cdf;
}

}  // namespace

TestFunction TestFunction::table(std::vector<std::pair<double, double>> knots) {
  if (knots.empty()) throw ValidationError("test-function table needs knots");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].first > knots[i - 1].first)) {
      throw ValidationError("test-function knots must be strictly increasing");
    }
  }
  TestFunction t;
  t.kind = Kind::table;
  t.knots = std::move(knots);
  return t;
}

double TestFunction::operator()(double x) const {
  switch (kind) {
    case Kind::identity:
      return x;
    case Kind::log:
      if (!(x > 0.0)) throw DomainError("log test function needs positive arguments");
      return std::log(x);
    case Kind::power: {
      if (x < 0.0 && exponent != std::floor(exponent)) {
        throw DomainError("fractional power of a negative eigenvalue");
      }
      if (x == 0.0 && exponent < 0.0) throw DomainError("negative power of zero");
      return std::pow(x, exponent);
    }
    case Kind::table: {
      if (x <= knots.front().first) return knots.front().second;
      if (x >= knots.back().first) return knots.back().second;
      auto hi = std::upper_bound(knots.begin(), knots.end(), x,
                                 [](double v, const auto& k) { return v < k.first; });
      auto lo = hi - 1;
      const double t = (x - lo->first) / (hi->first - lo->first);
      return lo->second + t * (hi->second - lo->second);
    }
  }
  return x;
}

double CdfCurve::operator()(double alpha) const {
  auto it = std::upper_bound(jumps.begin(), jumps.end(), alpha);
  if (it == jumps.begin()) return 0.0;
  return steps[static_cast<std::size_t>(it - jumps.begin()) - 1];
}

double sup_error(const Spectrum& u, const Spectrum& v) {
  check_same_length(u.size(), v.size(), "sup_error");
  double worst = 0.0;
  for (std::size_t l = 0; l < u.size(); ++l) {
    worst = std::max(worst, std::abs(u.descending(l) - v.descending(l)));
  }
  return worst;
}

double eq_dist_stat(const Spectrum& u, const Spectrum& v, const TestFunction& theta) {
  check_same_length(u.size(), v.size(), "eq_dist_stat");
  if (u.size() == 0) return 0.0;
  double acc = 0.0;
  for (std::size_t l = 0; l < u.size(); ++l) {
    acc += theta(u.descending(l)) - theta(v.descending(l));
  }
  return acc / static_cast<double>(u.size());
}

CdfCurve spectrum_cdf(const Spectrum& s) {
  if (s.size() == 0) throw LengthError("spectrum_cdf: empty spectrum");
  return step_cdf(std::vector<double>(s.values().begin(), s.values().end()));
}

CdfCurve symbol_cdf(const SymbolSpec& sym, std::size_t grid) {
  if (grid < 2) throw DomainError("symbol_cdf needs grid >= 2");
  std::vector<double> samples(grid);
  const auto count = static_cast<long long>(grid);
  const double g = static_cast<double>(grid);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    samples[static_cast<std::size_t>(i)] = sym.eval((static_cast<double>(i) + 0.5) / g);
  }
  return step_cdf(std::move(samples));
}

double cdf_sup_gap(const CdfCurve& f, const CdfCurve& g) {
  // Both are right-continuous steps, so the sup is attained at a jump point
  // of one of them.
  double worst = 0.0;
  for (double a : f.jumps) worst = std::max(worst, std::abs(f(a) - g(a)));
  for (double a : g.jumps) worst = std::max(worst, std::abs(f(a) - g(a)));
  return worst;
}

ErrorReport make_error_report(const Spectrum& exact, const Spectrum& approx,
                              Scheme scheme, const TestFunction& theta) {
  check_same_length(exact.size(), approx.size(), "make_error_report");
  if (exact.size() == 0) throw LengthError("make_error_report: empty spectra");
  ErrorReport report;
  report.n = exact.size();
  report.scheme = scheme;
  report.per_index_errors.resize(exact.size());
  for (std::size_t l = 0; l < exact.size(); ++l) {
    report.per_index_errors[l] = std::abs(exact.descending(l) - approx.descending(l));
  }
  report.sup_error =
      *std::max_element(report.per_index_errors.begin(), report.per_index_errors.end());
  report.extreme_errors = {report.per_index_errors.front(),
                           report.per_index_errors.back()};
  report.eq_dist_stat = eq_dist_stat(exact, approx, theta);
  return report;
}

double condition_estimate(const HermitianSequence& seq, std::size_t n,
                          double pd_tolerance) {
  if (n == 0) throw LengthError("condition_estimate: N must be positive");
  const Spectrum s = circulant_eigs(cesaro_row(seq, n));
  const double hi = s.max();
  const double lo = s.min();
  if (!(lo > 0.0) || lo <= pd_tolerance * std::abs(hi)) {
    throw NotPositiveDefiniteError(
        "smallest Cesaro eigenvalue " + std::to_string(lo) +
        " is not safely positive (largest " + std::to_string(hi) + ")");
  }
  return hi / lo;
}

bool sorted_alignment_check(std::span<const double> u, std::span<const double> v) {
  check_same_length(u.size(), v.size(), "sorted_alignment_check");
  std::vector<double> su(u.begin(), u.end());
  std::vector<double> sv(v.begin(), v.end());
  std::sort(su.begin(), su.end(), std::greater<>());
  std::sort(sv.begin(), sv.end(), std::greater<>());
  double sorted_gap = 0.0;
  double raw_gap = 0.0;
  for (std::size_t l = 0; l < u.size(); ++l) {
    sorted_gap = std::max(sorted_gap, std::abs(su[l] - sv[l]));
    raw_gap = std::max(raw_gap, std::abs(u[l] - v[l]));
  }
  return sorted_gap <= raw_gap;
}

bool sorted_gap_check(std::span<const double> u, std::size_t r) {
  const std::size_t n = u.size();
  if (r == 0 || r >= n) return true;
  std::vector<double> s(u.begin(), u.end());
  std::sort(s.begin(), s.end(), std::greater<>());
  double sorted_gap = 0.0;
  double raw_gap = 0.0;
  for (std::size_t step = 1; step <= r; ++step) {
    for (std::size_t l = 0; l + step < n; ++l) {
      sorted_gap = std::max(sorted_gap, s[l] - s[l + step]);
      raw_gap = std::max(raw_gap, std::abs(u[l] - u[l + step]));
    }
  }
  return sorted_gap <= raw_gap;
}

}  // namespace circeig
