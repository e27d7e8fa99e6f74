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

#ifndef LOUDLOSS_KERNELS_H_
#define LOUDLOSS_KERNELS_H_

#include <cstddef>
#include <string_view>
#include <vector>

namespace loudloss {
namespace kernels {

// Data-parallel inner loops, dispatched once at runtime. Every backend must
// agree with the scalar reference: bit-exactly for the elementwise kernels
// (multiply, accumulate_*, complex_magnitude; none of them may contract into
// FMA), and within tight relative tolerance for the reductions, whose lane
// accumulators reassociate the sum. Each backend is individually
// deterministic: the same inputs always produce the same bits.
struct Backend {
  const char* name;

  // sum over i of (a[i] - b[i])^2
  double (*reduce_sq_diff)(const double* a, const double* b, size_t n);
  // sum over i of w[i] * (a[i] - b[i])^2
  double (*reduce_weighted_sq_diff)(const double* a, const double* b,
                                    const double* w, size_t n);
  // sum over i of a[i] * b[i]
  double (*reduce_dot)(const double* a, const double* b, size_t n);
  // sum over i of a[i]^2
  double (*reduce_sq)(const double* a, size_t n);
  // out[i] = a[i] * b[i]
  void (*multiply)(const double* a, const double* b, double* out, size_t n);
  // out[i] += scale * (a[i] - b[i])
  void (*accumulate_scaled_diff)(double* out, const double* a, const double* b,
                                 double scale, size_t n);
  // out[i] += a[i] * b[i]
  void (*accumulate_product)(double* out, const double* a, const double* b,
                             size_t n);
  // interleaved holds n (re, im) pairs; out[i] = sqrt(re_i^2 + im_i^2)
  void (*complex_magnitude)(const double* interleaved, double* out, size_t n);
};

// Portable reference implementation. Always available.
const Backend& scalar_backend();

// Backends that can run on this machine, scalar first.
std::vector<const Backend*> available_backends();

// The backend used by the library. Defaults to the widest available SIMD
// variant; the LOUDLOSS_KERNELS environment variable ("scalar", "avx2",
// "auto") overrides the choice at startup.
const Backend& active();

// Force a backend by name ("auto" re-runs detection). Returns false and
// leaves the selection unchanged if the name is unknown or unavailable.
// Not safe to call concurrently with kernel use.
bool select(std::string_view name);

}  // namespace kernels
}  // namespace loudloss

#endif  // LOUDLOSS_KERNELS_H_
