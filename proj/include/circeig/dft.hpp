#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace circeig {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Reusable transform plan for one length. Smooth lengths (largest prime
/// factor <= 13) use a recursive mixed-radix decimation in time; every other
/// length goes through Bluestein's chirp-z algorithm on a power-of-two plan.
///
/// A plan is immutable after construction and may be shared across threads.
class DftPlan {
 public:
  explicit DftPlan(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool uses_bluestein() const noexcept { return bluestein_ != nullptr; }

  /// X[l] = sum_n x[n] exp(-j 2 pi l n / N), unnormalized.
  ComplexVector forward(std::span<const Complex> x) const;
  /// x[n] = (1/N) sum_l X[l] exp(+j 2 pi l n / N).
  ComplexVector inverse(std::span<const Complex> x) const;

  ~DftPlan();
  DftPlan(DftPlan&&) noexcept;
  DftPlan& operator=(DftPlan&&) noexcept;
  DftPlan(const DftPlan&) = delete;
  DftPlan& operator=(const DftPlan&) = delete;

 private:
  struct Bluestein;

  void mixed_radix(std::span<const Complex> in, std::span<Complex> out) const;
  void work(Complex* out, const Complex* in, std::size_t fstride,
            const std::size_t* factors) const;
  void butterfly(Complex* out, std::size_t fstride, std::size_t p,
                 std::size_t m) const;

  std::size_t n_;
  std::vector<std::size_t> factors_;  // (radix, remaining length) pairs
  ComplexVector twiddles_;            // exp(-j 2 pi k / N), k in [0, N)
  Bluestein* bluestein_ = nullptr;
};

/// Forward DFT of any length >= 1. Throws LengthError on empty input.
ComplexVector dft_forward(std::span<const Complex> x);

/// Inverse DFT (carries the 1/N factor). Throws LengthError on empty input.
ComplexVector dft_inverse(std::span<const Complex> x);

}  // namespace circeig
