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

#ifndef LOUDLOSS_SRC_FFT_H_
#define LOUDLOSS_SRC_FFT_H_

#include <complex>
#include <cstddef>
#include <vector>

namespace loudloss {

// Forward DFT of real input, one-sided output. Power-of-two sizes run an
// iterative radix-2 transform with precomputed twiddles; any other size
// falls back to direct summation (only small analysis windows hit that
// path). Same input, same bits: there is no planner state.
class Fft {
 public:
  explicit Fft(size_t n);

  size_t size() const { return n_; }

  // in has n_ samples; out receives bins 0..n_/2 (n_/2 + 1 values).
  void forward_real(const double* in, std::complex<double>* out) const;

 private:
  size_t n_;
  bool pow2_;
  std::vector<size_t> bit_reverse_;
  std::vector<std::complex<double>> twiddles_;  // exp(-2*pi*i*k/n), k < n/2
  mutable std::vector<std::complex<double>> work_;
};

}  // namespace loudloss

#endif  // LOUDLOSS_SRC_FFT_H_
