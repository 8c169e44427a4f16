#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circeig/dft.hpp"

namespace circeig {

enum class DecayKind { banded, absolutely_summable, square_summable, unknown };

struct DecayClass {
  DecayKind kind = DecayKind::unknown;
  std::size_t bandwidth = 0;  // meaningful for DecayKind::banded only
};

/// Generating coefficients h[k] of a Hermitian Toeplitz family. Only k >= 0 is
/// stored or generated; h[-k] is conj(h[k]).
///
/// Two backings exist: a finite coefficient list (zero past its end) and a
/// closed-form generator for the infinite built-in families, which is sampled
/// on demand for whatever matrix size is being built.
class HermitianSequence {
 public:
  using Generator = std::function<Complex(std::size_t)>;

  /// Finite support. Throws ValidationError if h[0] has a nonzero imaginary
  /// part or if a banded decay class is contradicted by the data.
  static HermitianSequence from_coefficients(ComplexVector coeffs,
                                             std::optional<DecayClass> decay = {});
  /// Closed-form coefficients; the generator must return a real value at k=0.
  static HermitianSequence from_generator(Generator gen, DecayClass decay);

  /// h[k] for k >= 0.
  Complex coeff(std::size_t k) const;
  /// h[k] for any signed k, using h[-k] = conj(h[k]).
  Complex operator[](std::ptrdiff_t k) const;
  /// h[0], ..., h[count-1].
  ComplexVector materialize(std::size_t count) const;

  const DecayClass& decay() const noexcept { return decay_; }
  /// Number of stored coefficients for finite sequences, nullopt otherwise.
  std::optional<std::size_t> stored_length() const;

 private:
  HermitianSequence() = default;

  ComplexVector stored_;
  Generator generator_;
  DecayClass decay_;
};

enum class Family { triangular, sawtooth, rect_window, banded, constant, custom };

/// Evaluable symbol on [0, 1] with known essential range.
struct SymbolSpec {
  std::function<double(double)> eval;
  double ess_sup = 0.0;
  double ess_inf = 0.0;
  bool connected_range = true;
  Family family = Family::custom;
  std::vector<double> params;
};

struct SymbolPair {
  HermitianSequence sequence;
  std::optional<SymbolSpec> symbol;  // absent for coefficient files
};

/// Unit-peak triangle tri(f / W), 0 < W < 1/2.
SymbolPair make_triangular(double width);
/// Period-1/2 sawtooth with values in [0, 1]; h[k] = (1 + (-1)^k) / (j 2 pi k).
SymbolPair make_sawtooth();
/// Indicator of [0, W] U [1 - W, 1], 0 < W < 1/2.
SymbolPair make_rect_window(double width);
/// Trigonometric polynomial from h[0..r]; essential range is sampled.
SymbolPair make_banded(ComplexVector coeffs);
SymbolPair make_constant(double value);
/// Coefficient file; no symbol attached, decay class unknown.
SymbolPair make_custom(const std::string& path);

/// Parses `family[:params]` as accepted by the command line, e.g.
/// `triangular:0.25`, `sawtooth`, `rect_window:0.25`, `constant:3`,
/// `banded:2,1,0.5`.
SymbolPair make_symbol(std::string_view text);

/// Parses `h0=2,h1=1,h2=0.5` (real coefficients; unspecified k are zero).
SymbolPair parse_inline_sequence(std::string_view text);

/// Names accepted by make_symbol, with a one-line description each.
std::vector<std::pair<std::string, std::string>> symbol_families();

// ---- coefficient files -------------------------------------------------

inline constexpr std::string_view kCoeffFileHeader = "#toeplitz-coeffs v1";

ComplexVector read_coeff_file(std::istream& in);
ComplexVector read_coeff_file(const std::string& path);
/// Writes h[0..count-1], skipping zero coefficients.
void write_coeff_file(std::ostream& out, const HermitianSequence& seq,
                      std::size_t count);

// ---- Fourier sums and kernels -----------------------------------------

/// S_n(f) = sum_{|k| <= n} h[k] exp(j 2 pi f k); f must lie in [0, 1].
double partial_fourier_sum(const HermitianSequence& seq, std::size_t n, double f);

/// sigma_N(f) = (1/N) sum_{n<N} S_n(f), computed with Fejer weights
/// (1 - |k|/N). Requires N >= 1 and f in [0, 1].
double cesaro_sum(const HermitianSequence& seq, std::size_t n_terms, double f);

/// D_N(f) = sin(pi N f) / sin(pi f), with the removable singularities at
/// integer f filled in by their limits.
double dirichlet(std::size_t n, double f);

/// Composite midpoint rule for the integral of D_N(f)^2 over [a, b] with
/// `panels` subintervals. Parallelized over panels.
double dirichlet_energy(std::size_t n, double a, double b,
                        std::size_t panels = std::size_t{1} << 16);

}  // namespace circeig
