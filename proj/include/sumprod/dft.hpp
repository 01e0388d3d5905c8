// Copyright 2026 The sumprod Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Complex DFT of arbitrary length: recursive mixed-radix decimation in time,
// with naive butterflies for small prime radices and Bluestein's chirp
// convolution for large ones.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <numbers>
#include <span>
#include <vector>

#include "sumprod/error.hpp"

namespace sumprod {

using Complex = std::complex<double>;

class DftPlan {
 public:
  /// Radices above this size go through Bluestein.
  static constexpr std::size_t kNaiveRadixLimit = 23;

  /// X[k] = sum_j x[j] exp(sign * 2 pi i j k / n).
  explicit DftPlan(std::size_t n, int sign = +1) : n_(n), sign_(sign >= 0 ? 1 : -1) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "DFT length must be positive");
    std::size_t rest = n;
    for (std::size_t f = 2; f * f <= rest; ++f) {
      while (rest % f == 0) {
        radices_.push_back(f);
        rest /= f;
      }
    }
    if (rest > 1) radices_.push_back(rest);
    twiddle_.resize(n);
    for (std::size_t k = 0; k < n; ++k) twiddle_[k] = unit_root(k, n, sign_);
    for (const auto r : radices_) {
      if (r > kNaiveRadixLimit && !bluestein_.count(r)) bluestein_.emplace(r, std::make_shared<Bluestein>(r, sign_));
    }
  }

  std::size_t size() const noexcept { return n_; }
  int sign() const noexcept { return sign_; }

  /// In-place transform. Re-entrant: scratch space is per call.
  void execute(std::span<Complex> data) const {
    if (data.size() != n_) fail(ErrorCode::InvalidArgument, "DFT input has the wrong length");
    if (n_ == 1) return;
    std::vector<Complex> input(data.begin(), data.end());
    recurse(input.data(), 1, data.data(), n_, 0);
  }

  /// Transform along one axis of a flattened tensor: for every offset the
  /// `length` entries spaced `stride` apart are transformed in place.
  void execute_strided(std::span<Complex> data, std::size_t stride) const {
    const std::size_t block = n_ * stride;
    if (block == 0 || data.size() % block != 0) fail(ErrorCode::InvalidArgument, "axis does not tile the tensor");
    std::vector<Complex> line(n_);
    for (std::size_t outer = 0; outer < data.size(); outer += block) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        Complex* base = data.data() + outer + inner;
        for (std::size_t j = 0; j < n_; ++j) line[j] = base[j * stride];
        execute(line);
        for (std::size_t j = 0; j < n_; ++j) base[j * stride] = line[j];
      }
    }
  }

 private:
  static Complex unit_root(std::size_t k, std::size_t n, int sign) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
  }

  // DFT of prime length r as a length-M cyclic convolution, M a power of two.
  struct Bluestein {
    Bluestein(std::size_t r, int sign) : r_(r) {
      m_ = 1;
      while (m_ < 2 * r - 1) m_ <<= 1;
      forward_ = std::make_unique<DftPlan>(m_, -1);
      inverse_ = std::make_unique<DftPlan>(m_, +1);
      // chirp[j] = exp(sign pi i j^2 / r), so W^{jq} = chirp[j] chirp[q] / chirp[q - j].
      // j^2 is reduced mod 2r to keep the angle small.
      chirp_.resize(r);
      for (std::size_t j = 0; j < r; ++j) {
        const std::size_t e = (j * j) % (2 * r);
        const double angle = sign * std::numbers::pi * static_cast<double>(e) / static_cast<double>(r);
        chirp_[j] = {std::cos(angle), std::sin(angle)};
      }
      kernel_.assign(m_, Complex{});
      for (std::size_t j = 0; j < r; ++j) {
        kernel_[j] = std::conj(chirp_[j]);
        if (j > 0) kernel_[m_ - j] = std::conj(chirp_[j]);
      }
      forward_->execute(kernel_);
    }

    void run(std::span<Complex> values) const {
      std::vector<Complex> work(m_, Complex{});
      for (std::size_t j = 0; j < r_; ++j) work[j] = values[j] * chirp_[j];
      forward_->execute(work);
      for (std::size_t j = 0; j < m_; ++j) work[j] *= kernel_[j];
      inverse_->execute(work);
      const double scale = 1.0 / static_cast<double>(m_);
      for (std::size_t k = 0; k < r_; ++k) values[k] = work[k] * chirp_[k] * scale;
    }

    std::size_t r_;
    std::size_t m_;
    std::unique_ptr<DftPlan> forward_;
    std::unique_ptr<DftPlan> inverse_;
    std::vector<Complex> chirp_;
    std::vector<Complex> kernel_;
  };

  // out[0..n) = DFT_n of in[0], in[stride], ..., using radices_[level..].
  void recurse(const Complex* in, std::size_t stride, Complex* out, std::size_t n, std::size_t level) const {
    if (n == 1) {
      out[0] = in[0];
      return;
    }
    const std::size_t r = radices_[level];
    const std::size_t m = n / r;
    for (std::size_t j = 0; j < r; ++j) recurse(in + j * stride, stride * r, out + j * m, m, level + 1);

    // twiddle_[e * step] = W_n^e
    const std::size_t step = n_ / n;
    if (r == 2) {
      for (std::size_t k = 0; k < m; ++k) {
        const Complex a = out[k];
        const Complex b = out[m + k] * twiddle_[k * step];
        out[k] = a + b;
        out[m + k] = a - b;
      }
      return;
    }
    const Bluestein* blue = nullptr;
    if (r > kNaiveRadixLimit) blue = bluestein_.at(r).get();
    std::vector<Complex> t(r), x(r);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < r; ++j) t[j] = out[j * m + k] * twiddle_[(j * k % n) * step];
      if (blue != nullptr) {
        blue->run(t);
        for (std::size_t q = 0; q < r; ++q) out[k + q * m] = t[q];
      } else {
        // W_r^{jq} = W_n^{jqm}
        for (std::size_t q = 0; q < r; ++q) {
          Complex acc = t[0];
          for (std::size_t j = 1; j < r; ++j) acc += t[j] * twiddle_[((j * q) % r) * m * step];
          x[q] = acc;
        }
        for (std::size_t q = 0; q < r; ++q) out[k + q * m] = x[q];
      }
    }
  }

  std::size_t n_;
  int sign_;
  std::vector<std::size_t> radices_;
  std::vector<Complex> twiddle_;
  std::map<std::size_t, std::shared_ptr<Bluestein>> bluestein_;
};

/// One axis of a flattened tensor.
struct DftAxis {
  std::size_t length;
  std::size_t stride;
};

/// Multidimensional DFT (same sign on every axis), in place.
inline void dft_axes(std::span<Complex> data, std::span<const DftAxis> axes, int sign = +1) {
  std::map<std::size_t, std::unique_ptr<DftPlan>> plans;
  for (const auto& axis : axes) {
    auto& plan = plans[axis.length];
    if (!plan) plan = std::make_unique<DftPlan>(axis.length, sign);
    plan->execute_strided(data, axis.stride);
  }
}

}  // namespace sumprod
