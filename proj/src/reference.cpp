#include "circeig/reference.hpp"

#include <cmath>
#include <numbers>

#include "circeig/error.hpp"

namespace circeig::reference {

ComplexVector naive_dft(std::span<const Complex> x) {
  const std::size_t n = x.size();
  if (n == 0) throw LengthError("naive_dft: empty input");
  ComplexVector out(n);
  for (std::size_t l = 0; l < n; ++l) {
    Complex acc{};
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t idx = (l * k) % n;
      const double angle =
          -2.0 * std::numbers::pi * static_cast<double>(idx) / static_cast<double>(n);
      acc += x[k] * Complex{std::cos(angle), std::sin(angle)};
    }
    out[l] = acc;
  }
  return out;
}

DenseHermitian build_toeplitz(const HermitianSequence& seq, std::size_t n) {
  DenseHermitian a(n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t c = 0; c < n; ++c) {
      a(m, c) = seq[static_cast<std::ptrdiff_t>(m) - static_cast<std::ptrdiff_t>(c)];
    }
  }
  return a;
}

ComplexVector dense_matvec(const DenseHermitian& a, std::span<const Complex> x) {
  if (x.size() != a.size()) throw LengthError("dense_matvec: |x| != N");
  ComplexVector y(a.size());
  for (std::size_t m = 0; m < a.size(); ++m) {
    for (std::size_t c = 0; c < a.size(); ++c) y[m] += a(m, c) * x[c];
  }
  return y;
}

ComplexVector toeplitz_matvec(const HermitianSequence& seq, std::size_t n,
                              std::span<const Complex> x) {
  if (x.size() != n) throw LengthError("toeplitz_matvec: |x| != N");
  const ComplexVector h = seq.materialize(n);
  ComplexVector y(n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t c = 0; c < n; ++c) {
      y[m] += (m >= c ? h[m - c] : std::conj(h[c - m])) * x[c];
    }
  }
  return y;
}

double dirichlet_energy(std::size_t n, double a, double b, std::size_t panels) {
  if (!(a < b)) throw DomainError("dirichlet_energy needs a < b");
  const double h = (b - a) / static_cast<double>(panels);
  double acc = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double d = dirichlet(n, a + (static_cast<double>(i) + 0.5) * h);
    acc += d * d;
  }
  return acc * h;
}

}  // namespace circeig::reference
