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

#include <cmath>
#include <cstddef>

#include "loudloss/kernels.h"

namespace loudloss {
namespace kernels {
namespace {

// Reference kernels. Reductions accumulate strictly left to right; goldens
// and the SIMD equivalence tests are defined against this order.

double reduce_sq_diff(const double* a, const double* b, size_t n) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

double reduce_weighted_sq_diff(const double* a, const double* b,
                               const double* w, size_t n) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double d = a[i] - b[i];
    acc += w[i] * (d * d);
  }
  return acc;
}

double reduce_dot(const double* a, const double* b, size_t n) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) {
    acc += a[i] * b[i];
  }
  return acc;
}

double reduce_sq(const double* a, size_t n) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) {
    acc += a[i] * a[i];
  }
  return acc;
}

void multiply(const double* a, const double* b, double* out, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    out[i] = a[i] * b[i];
  }
}

void accumulate_scaled_diff(double* out, const double* a, const double* b,
                            double scale, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    out[i] += scale * (a[i] - b[i]);
  }
}

void accumulate_product(double* out, const double* a, const double* b,
                        size_t n) {
  for (size_t i = 0; i < n; ++i) {
    out[i] += a[i] * b[i];
  }
}

void complex_magnitude(const double* interleaved, double* out, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    double re = interleaved[2 * i];
    double im = interleaved[2 * i + 1];
    out[i] = std::sqrt(re * re + im * im);
  }
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend = {
      "scalar",
      reduce_sq_diff,
      reduce_weighted_sq_diff,
      reduce_dot,
      reduce_sq,
      multiply,
      accumulate_scaled_diff,
      accumulate_product,
      complex_magnitude,
  };
  return backend;
}

}  // namespace kernels
}  // namespace loudloss
