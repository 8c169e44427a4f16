#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "circeig/dft.hpp"
#include "circeig/sequences.hpp"

namespace circeig {

/// Square complex matrix in row-major storage, intended to be Hermitian.
/// Storage is not repaired: exact_eigs checks the Hermitian property and
/// rejects matrices that violate it.
class DenseHermitian {
 public:
  explicit DenseHermitian(std::size_t n) : n_(n), entries_(n * n) {}
  DenseHermitian(std::size_t n, ComplexVector entries);

  std::size_t size() const noexcept { return n_; }
  Complex& operator()(std::size_t m, std::size_t n) { return entries_[m * n_ + n]; }
  const Complex& operator()(std::size_t m, std::size_t n) const {
    return entries_[m * n_ + n];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  /// max |A[m][n] - conj(A[n][m])| over all entries.
  double hermitian_defect() const;
  /// Sum of the (real parts of the) diagonal.
  double trace() const;
  double frobenius_norm() const;
  /// Principal submatrix made of the first `k` rows and columns.
  DenseHermitian leading(std::size_t k) const;

 private:
  std::size_t n_;
  ComplexVector entries_;
};

/// Real eigenvalue multiset with a descending permutation: values[order[0]] is
/// the largest. Ties keep the lower index first.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const std::size_t> order() const noexcept { return order_; }
  /// l-th largest eigenvalue.
  double descending(std::size_t l) const { return values_[order_[l]]; }
  std::vector<double> descending() const;
  double max() const { return descending(0); }
  double min() const { return descending(size() - 1); }

 private:
  std::vector<double> values_;
  std::vector<std::size_t> order_;
};

/// H_N[m][n] = h[m - n].
DenseHermitian build_toeplitz(const HermitianSequence& seq, std::size_t n);

/// y = H_N x through the (2N-1)-point circulant embedding of H_N.
ComplexVector toeplitz_matvec(const HermitianSequence& seq, std::size_t n,
                              std::span<const Complex> x);

/// y = A x, parallel over rows.
ComplexVector dense_matvec(const DenseHermitian& a, std::span<const Complex> x);

/// All eigenvalues of a Hermitian matrix. Throws NotHermitianError when the
/// stored asymmetry exceeds 1e-12 (max-abs), LengthError for an empty matrix.
Spectrum exact_eigs(const DenseHermitian& a);

inline constexpr double kHermitianStorageTolerance = 1e-12;

}  // namespace circeig
