#include "circeig/dft.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "circeig/error.hpp"

namespace circeig {

namespace {

constexpr std::size_t kMaxRadix = 13;

Complex unit_root(std::size_t k, std::size_t n) {
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

// Factor n into (radix, n / cumulative) pairs, radix 4 first, then 2, then
// odd primes. Returns false when a prime factor exceeds kMaxRadix.
bool factorize(std::size_t n, std::vector<std::size_t>& factors) {
  std::size_t remaining = n;
  std::size_t p = 4;
  while (remaining > 1) {
    while (remaining % p != 0) {
      switch (p) {
        case 4: p = 2; break;
        case 2: p = 3; break;
        default: p += 2; break;
      }
      if (p > kMaxRadix) return false;
    }
    remaining /= p;
    factors.push_back(p);
    factors.push_back(remaining);
  }
  return true;
}

}  // namespace

struct DftPlan::Bluestein {
  std::size_t m;
  DftPlan inner;
  ComplexVector chirp;       // exp(-j pi k^2 / n)
  ComplexVector kernel_hat;  // DFT_m of the conjugate chirp, wrapped

  explicit Bluestein(std::size_t n) : m(1), inner(1) {
    while (m < 2 * n - 1) m <<= 1;
    inner = DftPlan(m);
    chirp.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      // k^2 mod 2n keeps the angle argument small.
      const std::size_t k2 = (k * k) % (2 * n);
      const double angle = -std::numbers::pi * static_cast<double>(k2) /
                           static_cast<double>(n);
      chirp[k] = {std::cos(angle), std::sin(angle)};
    }
    ComplexVector kernel(m, Complex{});
    kernel[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) {
      kernel[k] = std::conj(chirp[k]);
      kernel[m - k] = std::conj(chirp[k]);
    }
    kernel_hat = inner.forward(kernel);
  }

  ComplexVector run(std::span<const Complex> x) const {
    const std::size_t n = chirp.size();
    ComplexVector a(m, Complex{});
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
    ComplexVector a_hat = inner.forward(a);
    for (std::size_t k = 0; k < m; ++k) a_hat[k] *= kernel_hat[k];
    const ComplexVector conv = inner.inverse(a_hat);
    ComplexVector out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = conv[k] * chirp[k];
    return out;
  }
};

DftPlan::DftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw LengthError("DFT length must be at least 1");
  if (n == 1) return;
  if (!factorize(n, factors_)) {
    factors_.clear();
    bluestein_ = new Bluestein(n);
    return;
  }
  twiddles_.resize(n);
  for (std::size_t k = 0; k < n; ++k) twiddles_[k] = unit_root(k, n);
}

DftPlan::~DftPlan() { delete bluestein_; }

DftPlan::DftPlan(DftPlan&& other) noexcept
    : n_(other.n_),
      factors_(std::move(other.factors_)),
      twiddles_(std::move(other.twiddles_)),
      bluestein_(std::exchange(other.bluestein_, nullptr)) {}

DftPlan& DftPlan::operator=(DftPlan&& other) noexcept {
  if (this != &other) {
    delete bluestein_;
    n_ = other.n_;
    factors_ = std::move(other.factors_);
    twiddles_ = std::move(other.twiddles_);
    bluestein_ = std::exchange(other.bluestein_, nullptr);
  }
  return *this;
}

ComplexVector DftPlan::forward(std::span<const Complex> x) const {
  if (x.size() != n_) throw LengthError("DFT input length does not match plan");
  if (n_ == 1) return ComplexVector(x.begin(), x.end());
  if (bluestein_) return bluestein_->run(x);
  ComplexVector out(n_);
  mixed_radix(x, out);
  return out;
}

ComplexVector DftPlan::inverse(std::span<const Complex> x) const {
  if (x.size() != n_) throw LengthError("DFT input length does not match plan");
  ComplexVector conj_in(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) conj_in[k] = std::conj(x[k]);
  ComplexVector out = forward(conj_in);
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& v : out) v = std::conj(v) * scale;
  return out;
}

void DftPlan::mixed_radix(std::span<const Complex> in,
                          std::span<Complex> out) const {
  work(out.data(), in.data(), 1, factors_.data());
}

void DftPlan::work(Complex* out, const Complex* in, std::size_t fstride,
                   const std::size_t* factors) const {
  const std::size_t p = factors[0];
  const std::size_t m = factors[1];
  if (m == 1) {
    for (std::size_t q = 0; q < p; ++q) out[q] = in[q * fstride];
  } else {
    for (std::size_t q = 0; q < p; ++q) {
      work(out + q * m, in + q * fstride, fstride * p, factors + 2);
    }
  }
  butterfly(out, fstride, p, m);
}

void DftPlan::butterfly(Complex* out, std::size_t fstride, std::size_t p,
                        std::size_t m) const {
  const Complex* tw = twiddles_.data();
  if (p == 2) {
    for (std::size_t k = 0; k < m; ++k) {
      const Complex t = out[k + m] * tw[k * fstride];
      out[k + m] = out[k] - t;
      out[k] += t;
    }
    return;
  }
  if (p == 4) {
    for (std::size_t k = 0; k < m; ++k) {
      const Complex a0 = out[k];
      const Complex a1 = out[k + m] * tw[k * fstride];
      const Complex a2 = out[k + 2 * m] * tw[2 * k * fstride];
      const Complex a3 = out[k + 3 * m] * tw[3 * k * fstride];
      const Complex s02 = a0 + a2, d02 = a0 - a2;
      const Complex s13 = a1 + a3, d13 = a1 - a3;
      // -j * d13
      const Complex rot{d13.imag(), -d13.real()};
      out[k] = s02 + s13;
      out[k + m] = d02 + rot;
      out[k + 2 * m] = s02 - s13;
      out[k + 3 * m] = d02 - rot;
    }
    return;
  }
  // Generic odd radix: direct p-point DFT on each twiddled group.
  Complex scratch[kMaxRadix];
  const std::size_t period = p * m * fstride;  // == n_ up to the stage
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t r = 0; r < p; ++r) {
      scratch[r] = out[k + r * m] * tw[(r * k * fstride) % n_];
    }
    for (std::size_t q = 0; q < p; ++q) {
      Complex acc = scratch[0];
      for (std::size_t r = 1; r < p; ++r) {
        acc += scratch[r] * tw[((r * q) % p) * m * fstride % period];
      }
      out[k + q * m] = acc;
    }
  }
}

ComplexVector dft_forward(std::span<const Complex> x) {
  if (x.empty()) throw LengthError("dft_forward: empty input");
  return DftPlan(x.size()).forward(x);
}

ComplexVector dft_inverse(std::span<const Complex> x) {
  if (x.empty()) throw LengthError("dft_inverse: empty input");
  return DftPlan(x.size()).inverse(x);
}

}  // namespace circeig
