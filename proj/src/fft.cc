// Copyright 2026 The Loudloss Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fft.h"

#include <cmath>

#include "loudloss/error.h"

namespace loudloss {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

Fft::Fft(size_t n) : n_(n), pow2_(is_pow2(n)) {
  if (n_ < 2) {
    throw Error(ErrorCode::kInvalidConfig, "fft size must be at least 2");
  }
  if (!pow2_) {
    return;  // direct summation needs no tables
  }
  bit_reverse_.resize(n_);
  size_t bits = 0;
  while ((size_t{1} << bits) < n_) {
    ++bits;
  }
  for (size_t i = 0; i < n_; ++i) {
    size_t r = 0;
    for (size_t b = 0; b < bits; ++b) {
      r |= ((i >> b) & 1) << (bits - 1 - b);
    }
    bit_reverse_[i] = r;
  }
  twiddles_.resize(n_ / 2);
  for (size_t k = 0; k < n_ / 2; ++k) {
    double angle = -kTwoPi * static_cast<double>(k) / static_cast<double>(n_);
    twiddles_[k] = {std::cos(angle), std::sin(angle)};
  }
  work_.resize(n_);
}

void Fft::forward_real(const double* in, std::complex<double>* out) const {
  if (!pow2_) {
    for (size_t k = 0; k <= n_ / 2; ++k) {
      double re = 0.0;
      double im = 0.0;
      for (size_t n = 0; n < n_; ++n) {
        double angle =
            -kTwoPi * static_cast<double>(k) * static_cast<double>(n) /
            static_cast<double>(n_);
        re += in[n] * std::cos(angle);
        im += in[n] * std::sin(angle);
      }
      out[k] = {re, im};
    }
    return;
  }

  for (size_t i = 0; i < n_; ++i) {
    work_[bit_reverse_[i]] = {in[i], 0.0};
  }
  for (size_t len = 2; len <= n_; len <<= 1) {
    size_t stride = n_ / len;
    size_t half = len / 2;
    for (size_t start = 0; start < n_; start += len) {
      for (size_t k = 0; k < half; ++k) {
        std::complex<double> w = twiddles_[k * stride];
        std::complex<double> u = work_[start + k];
        std::complex<double> v = work_[start + k + half] * w;
        work_[start + k] = u + v;
        work_[start + k + half] = u - v;
      }
    }
  }
  for (size_t k = 0; k <= n_ / 2; ++k) {
    out[k] = work_[k];
  }
}

}  // namespace loudloss
