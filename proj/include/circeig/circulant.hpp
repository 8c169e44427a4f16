#pragma once

#include <cstddef>
#include <string_view>
#include <utility>

#include "circeig/dft.hpp"
#include "circeig/sequences.hpp"
#include "circeig/toeplitz.hpp"

namespace circeig {

// fourier: eigenvalues sample S_{N-1}(l/N).
// strang: keeps the central band of H_N and wraps it.
// cesaro: eigenvalues sample sigma_N(l/N); Frobenius-closest circulant to H_N.
enum class Scheme { fourier, strang, cesaro };

std::string_view scheme_name(Scheme s);
/// Throws ValidationError for anything but "fourier", "strang", "cesaro".
Scheme parse_scheme(std::string_view name);

/// First row of a circulant: C[m][n] = row[(n - m) mod N].
struct CirculantRow {
  Scheme scheme = Scheme::fourier;
  ComplexVector row;

  std::size_t size() const noexcept { return row.size(); }
  /// max |row[k] - conj(row[N-k])| together with |Im row[0]|.
  double hermitian_defect() const;
  DenseHermitian densify() const;
};

CirculantRow fourier_row(const HermitianSequence& seq, std::size_t n);
CirculantRow strang_row(const HermitianSequence& seq, std::size_t n);
CirculantRow cesaro_row(const HermitianSequence& seq, std::size_t n);
CirculantRow make_row(Scheme scheme, const HermitianSequence& seq, std::size_t n);

/// Eigenvalues lambda_l = sum_n row[n] exp(-j 2 pi l n / N). Throws
/// NotHermitianError when any imaginary residue exceeds 1e-9 * ||row||_1.
Spectrum circulant_eigs(const CirculantRow& row);

/// ||C - H_N||_F computed diagonal by diagonal, without forming either matrix.
double frobenius_distance(const CirculantRow& row, const HermitianSequence& seq);

/// (||Cbar - H||_F, ||(Cbar + perturbation) - H||_F).
std::pair<double, double> chan_optimality_gap(const HermitianSequence& seq,
                                              std::size_t n,
                                              const CirculantRow& perturbation);

inline constexpr double kCirculantResidueTolerance = 1e-9;

}  // namespace circeig
