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

// AVX2 kernel variants. This translation unit is compiled with -mavx2 and
// nothing else: FMA stays off so the elementwise kernels round exactly like
// the scalar reference (separate multiply and add, never contracted).

#if !defined(__x86_64__) && !defined(_M_X64)
#error "avx2.cc must only be built for x86_64 targets"
#endif
#ifndef __AVX2__
#error "avx2.cc requires -mavx2"
#endif

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "loudloss/kernels.h"

namespace loudloss {
namespace kernels {
namespace {

// Horizontal sum with a fixed association: ((l0 + l1) + l2) + l3.
inline double hsum(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
}

double reduce_sq_diff(const double* a, const double* b, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double sum = hsum(acc);
  for (; i < n; ++i) {
    double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

double reduce_weighted_sq_diff(const double* a, const double* b,
                               const double* w, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    __m256d wd = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_mul_pd(d, d));
    acc = _mm256_add_pd(acc, wd);
  }
  double sum = hsum(acc);
  for (; i < n; ++i) {
    double d = a[i] - b[i];
    sum += w[i] * (d * d);
  }
  return sum;
}

double reduce_dot(const double* a, const double* b, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(
        acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  double sum = hsum(acc);
  for (; i < n; ++i) {
    sum += a[i] * b[i];
  }
  return sum;
}

double reduce_sq(const double* a, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(a + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double sum = hsum(acc);
  for (; i < n; ++i) {
    sum += a[i] * a[i];
  }
  return sum;
}

void multiply(const double* a, const double* b, double* out, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(
        out + i,
        _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) {
    out[i] = a[i] * b[i];
  }
}

void accumulate_scaled_diff(double* out, const double* a, const double* b,
                            double scale, size_t n) {
  __m256d s = _mm256_set1_pd(scale);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    __m256d acc = _mm256_add_pd(_mm256_loadu_pd(out + i), _mm256_mul_pd(s, d));
    _mm256_storeu_pd(out + i, acc);
  }
  for (; i < n; ++i) {
    out[i] += scale * (a[i] - b[i]);
  }
}

void accumulate_product(double* out, const double* a, const double* b,
                        size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d p = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), p));
  }
  for (; i < n; ++i) {
    out[i] += a[i] * b[i];
  }
}

void complex_magnitude(const double* interleaved, double* out, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(interleaved + 2 * i);      // r0 i0 r1 i1
    __m256d y = _mm256_loadu_pd(interleaved + 2 * i + 4);  // r2 i2 r3 i3
    // hadd pairs within 128-bit halves: [m0, m2, m1, m3]; permute restores
    // index order. The adds pair re^2 with im^2 exactly like the scalar code.
    __m256d s = _mm256_hadd_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y));
    s = _mm256_permute4x64_pd(s, _MM_SHUFFLE(3, 1, 2, 0));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(s));
  }
  for (; i < n; ++i) {
    double re = interleaved[2 * i];
    double im = interleaved[2 * i + 1];
    out[i] = std::sqrt(re * re + im * im);
  }
}

}  // namespace

const Backend& avx2_backend() {
  static const Backend backend = {
      "avx2",
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
