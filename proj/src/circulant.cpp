#include "circeig/circulant.hpp"

#include <cmath>
#include <string>

#include "circeig/error.hpp"

namespace circeig {

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::fourier: return "fourier";
    case Scheme::strang: return "strang";
    case Scheme::cesaro: return "cesaro";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "fourier") return Scheme::fourier;
  if (name == "strang") return Scheme::strang;
  if (name == "cesaro") return Scheme::cesaro;
  throw ValidationError("unknown scheme '" + std::string(name) + "'");
}

double CirculantRow::hermitian_defect() const {
  const std::size_t n = row.size();
  if (n == 0) return 0.0;
  double defect = std::abs(row[0].imag());
  for (std::size_t k = 1; k < n; ++k) {
    defect = std::max(defect, std::abs(row[k] - std::conj(row[n - k])));
  }
  return defect;
}

DenseHermitian CirculantRow::densify() const {
  const std::size_t n = row.size();
  DenseHermitian a(n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t c = 0; c < n; ++c) a(m, c) = row[(c + n - m) % n];
  }
  return a;
}

CirculantRow fourier_row(const HermitianSequence& seq, std::size_t n) {
  CirculantRow out{Scheme::fourier, ComplexVector(n)};
  if (n == 0) return out;
  const auto nn = static_cast<std::ptrdiff_t>(n);
  out.row[0] = seq.coeff(0);
  for (std::ptrdiff_t k = 1; k < nn; ++k) {
    out.row[static_cast<std::size_t>(k)] = seq[-k] + seq[nn - k];
  }
  return out;
}

CirculantRow strang_row(const HermitianSequence& seq, std::size_t n) {
  CirculantRow out{Scheme::strang, ComplexVector(n)};
  const auto nn = static_cast<std::ptrdiff_t>(n);
  const std::ptrdiff_t head = (nn - 1) / 2;  // floor((N-1)/2)
  const std::ptrdiff_t tail = nn / 2 + 1;    // ceil((N+1)/2)
  for (std::ptrdiff_t k = 0; k <= head && k < nn; ++k) {
    out.row[static_cast<std::size_t>(k)] = seq[-k];
  }
  for (std::ptrdiff_t k = tail; k < nn; ++k) {
    out.row[static_cast<std::size_t>(k)] = seq[nn - k];
  }
  // For even N the middle entry row[N/2] stays zero.
  return out;
}

CirculantRow cesaro_row(const HermitianSequence& seq, std::size_t n) {
  CirculantRow out{Scheme::cesaro, ComplexVector(n)};
  if (n == 0) return out;
  const auto nn = static_cast<std::ptrdiff_t>(n);
  const double inv = 1.0 / static_cast<double>(n);
  out.row[0] = seq.coeff(0);
  for (std::ptrdiff_t k = 1; k < nn; ++k) {
    out.row[static_cast<std::size_t>(k)] =
        inv * (static_cast<double>(nn - k) * seq[-k] + static_cast<double>(k) * seq[nn - k]);
  }
  return out;
}

CirculantRow make_row(Scheme scheme, const HermitianSequence& seq, std::size_t n) {
  switch (scheme) {
    case Scheme::fourier: return fourier_row(seq, n);
    case Scheme::strang: return strang_row(seq, n);
    case Scheme::cesaro: return cesaro_row(seq, n);
  }
  throw ValidationError("unknown scheme");
}

Spectrum circulant_eigs(const CirculantRow& row) {
  if (row.size() == 0) throw LengthError("circulant_eigs: empty row");
  double l1 = 0.0;
  for (const auto& v : row.row) l1 += std::abs(v);
  const ComplexVector lambda = dft_forward(row.row);
  const double limit = kCirculantResidueTolerance * l1;
  std::vector<double> values(lambda.size());
  for (std::size_t l = 0; l < lambda.size(); ++l) {
    if (std::abs(lambda[l].imag()) > limit) {
      throw NotHermitianError("circulant_eigs: row is not Hermitian (imaginary residue " +
                              std::to_string(lambda[l].imag()) + ")");
    }
    values[l] = lambda[l].real();
  }
  return Spectrum(std::move(values));
}

double frobenius_distance(const CirculantRow& row, const HermitianSequence& seq) {
  const std::size_t n = row.size();
  const auto nn = static_cast<std::ptrdiff_t>(n);
  // Entry (m, c) with d = c - m: circulant gives row[d mod N], Toeplitz gives
  // h[m - c] = h[-d]. Offset d occurs N - |d| times.
  double acc = 0.0;
  for (std::ptrdiff_t d = -(nn - 1); d < nn; ++d) {
    const Complex c = row.row[static_cast<std::size_t>((d + nn) % nn)];
    const double count = static_cast<double>(nn - std::abs(d));
    acc += count * std::norm(c - seq[-d]);
  }
  return std::sqrt(acc);
}

std::pair<double, double> chan_optimality_gap(const HermitianSequence& seq,
                                              std::size_t n,
                                              const CirculantRow& perturbation) {
  if (perturbation.size() != n) {
    throw LengthError("chan_optimality_gap: perturbation length != N");
  }
  CirculantRow best = cesaro_row(seq, n);
  CirculantRow moved = best;
  for (std::size_t k = 0; k < n; ++k) moved.row[k] += perturbation.row[k];
  return {frobenius_distance(best, seq), frobenius_distance(moved, seq)};
}

}  // namespace circeig
