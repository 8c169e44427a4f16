#include "circeig/toeplitz.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "circeig/error.hpp"

namespace circeig {

DenseHermitian::DenseHermitian(std::size_t n, ComplexVector entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw LengthError("dense matrix storage does not match N*N");
  }
}

double DenseHermitian::hermitian_defect() const {
  double defect = 0.0;
  for (std::size_t m = 0; m < n_; ++m) {
    for (std::size_t n = m; n < n_; ++n) {
      defect = std::max(defect, std::abs((*this)(m, n) - std::conj((*this)(n, m))));
    }
  }
  return defect;
}

double DenseHermitian::trace() const {
  double t = 0.0;
  for (std::size_t m = 0; m < n_; ++m) t += (*this)(m, m).real();
  return t;
}

double DenseHermitian::frobenius_norm() const {
  double acc = 0.0;
  for (const auto& v : entries_) acc += std::norm(v);
  return std::sqrt(acc);
}

DenseHermitian DenseHermitian::leading(std::size_t k) const {
  if (k > n_) throw LengthError("submatrix larger than matrix");
  DenseHermitian sub(k);
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t n = 0; n < k; ++n) sub(m, n) = (*this)(m, n);
  }
  return sub;
}

Spectrum::Spectrum(std::vector<double> values)
    : values_(std::move(values)), order_(values_.size()) {
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
    return values_[a] > values_[b];
  });
}

std::vector<double> Spectrum::descending() const {
  std::vector<double> out(size());
  for (std::size_t l = 0; l < size(); ++l) out[l] = descending(l);
  return out;
}

DenseHermitian build_toeplitz(const HermitianSequence& seq, std::size_t n) {
  // h[-(N-1)] .. h[N-1], indexed by (m - n) + N - 1.
  ComplexVector diag(n == 0 ? 0 : 2 * n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    diag[n - 1 + k] = seq.coeff(k);
    diag[n - 1 - k] = std::conj(seq.coeff(k));
  }
  DenseHermitian a(n);
  const auto rows = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long m = 0; m < rows; ++m) {
    const auto row = static_cast<std::size_t>(m);
    for (std::size_t col = 0; col < n; ++col) a(row, col) = diag[row + n - 1 - col];
  }
  return a;
}

ComplexVector toeplitz_matvec(const HermitianSequence& seq, std::size_t n,
                              std::span<const Complex> x) {
  if (x.size() != n) throw LengthError("toeplitz_matvec: |x| != N");
  if (n == 0) return {};
  const std::size_t m = 2 * n - 1;
  // First column of the embedding circulant: h[0..N-1], then h[-(N-1)..-1].
  ComplexVector column(m);
  for (std::size_t k = 0; k < n; ++k) column[k] = seq.coeff(k);
  for (std::size_t k = 1; k < n; ++k) column[m - k] = std::conj(seq.coeff(k));
  ComplexVector padded(m, Complex{});
  std::copy(x.begin(), x.end(), padded.begin());

  const DftPlan plan(m);
  ComplexVector spectrum = plan.forward(column);
  const ComplexVector x_hat = plan.forward(padded);
  for (std::size_t k = 0; k < m; ++k) spectrum[k] *= x_hat[k];
  ComplexVector y = plan.inverse(spectrum);
  y.resize(n);
  return y;
}

ComplexVector dense_matvec(const DenseHermitian& a, std::span<const Complex> x) {
  const std::size_t n = a.size();
  if (x.size() != n) throw LengthError("dense_matvec: |x| != N");
  ComplexVector y(n);
  const auto rows = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long m = 0; m < rows; ++m) {
    const auto row = static_cast<std::size_t>(m);
    Complex acc{};
    for (std::size_t col = 0; col < n; ++col) acc += a(row, col) * x[col];
    y[row] = acc;
  }
  return y;
}

Spectrum exact_eigs(const DenseHermitian& a) {
  const std::size_t n = a.size();
  if (n == 0) throw LengthError("exact_eigs: empty matrix");
  if (a.hermitian_defect() > kHermitianStorageTolerance) {
    throw NotHermitianError("exact_eigs: matrix storage is not Hermitian");
  }
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const Matrix> view(a.entries().data(), static_cast<Eigen::Index>(n),
                                      static_cast<Eigen::Index>(n));
  const Eigen::MatrixXcd work = view;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(work,
                                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("exact_eigs: eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return Spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

}  // namespace circeig
