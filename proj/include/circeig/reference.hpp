#pragma once

// Serial, straightforward versions of the parallel and fast kernels. They are
// kept for cross-checking in tests and as benchmark baselines.

#include <cstddef>
#include <span>

#include "circeig/dft.hpp"
#include "circeig/sequences.hpp"
#include "circeig/toeplitz.hpp"

namespace circeig::reference {

/// O(N^2) direct summation of the forward DFT.
ComplexVector naive_dft(std::span<const Complex> x);

DenseHermitian build_toeplitz(const HermitianSequence& seq, std::size_t n);

ComplexVector dense_matvec(const DenseHermitian& a, std::span<const Complex> x);

/// O(N^2) Toeplitz product straight from the coefficients.
ComplexVector toeplitz_matvec(const HermitianSequence& seq, std::size_t n,
                              std::span<const Complex> x);

double dirichlet_energy(std::size_t n, double a, double b, std::size_t panels);

}  // namespace circeig::reference
