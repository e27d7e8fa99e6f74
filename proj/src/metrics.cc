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

#include "loudloss/metrics.h"

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "loudloss/error.h"
#include "loudloss/kernels.h"

namespace loudloss {
namespace {

// Residuals this far below the projection energy are rounding noise, not
// signal; report them as a perfect reconstruction.
constexpr double kPerfectResidualRatio = 1e-24;

void check_lengths(const AudioClip& est, const AudioClip& ref) {
  if (est.samples.size() != ref.samples.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "length mismatch between estimate and reference");
  }
  if (est.samples.empty()) {
    throw Error(ErrorCode::kLengthMismatch, "empty clips");
  }
}

}  // namespace

SnrResult snr(const AudioClip& est, const AudioClip& ref) {
  check_lengths(est, ref);
  const kernels::Backend& k = kernels::active();
  size_t n = ref.samples.size();
  double ref_energy = k.reduce_sq(ref.samples.data(), n);
  if (ref_energy == 0.0) {
    throw Error(ErrorCode::kSilentReference, "reference is all zeros");
  }
  double err_energy =
      k.reduce_sq_diff(ref.samples.data(), est.samples.data(), n);
  if (err_energy == 0.0) {
    return {std::numeric_limits<double>::infinity(), true};
  }
  return {10.0 * std::log10(ref_energy / err_energy), false};
}

SnrResult si_snr(const AudioClip& est, const AudioClip& ref) {
  check_lengths(est, ref);
  const kernels::Backend& k = kernels::active();
  size_t n = est.samples.size();

  // Divide est by its largest magnitude before anything else. Division is
  // correctly rounded, so (c*e_i)/(c*e_max) produces the same bits as
  // e_i/e_max whenever the caller's scaling c*e was exact; every later
  // operation then sees identical inputs, which is what makes the metric
  // *exactly* scale invariant (a negative c cancels the same way).
  double peak = 0.0;
  for (double s : est.samples) {
    peak = std::max(peak, std::abs(s));
  }
  if (peak == 0.0) {
    throw Error(ErrorCode::kOrthogonalEstimate, "estimate is all zeros");
  }
  std::vector<double> e(n);
  for (size_t i = 0; i < n; ++i) {
    e[i] = est.samples[i] / peak;
  }

  double e_mean = 0.0;
  double r_mean = 0.0;
  for (size_t i = 0; i < n; ++i) {
    e_mean += e[i];
    r_mean += ref.samples[i];
  }
  e_mean /= static_cast<double>(n);
  r_mean /= static_cast<double>(n);
  std::vector<double> r(n);
  for (size_t i = 0; i < n; ++i) {
    e[i] -= e_mean;
    r[i] = ref.samples[i] - r_mean;
  }

  double rr = k.reduce_sq(r.data(), n);
  if (rr == 0.0) {
    throw Error(ErrorCode::kSilentReference,
                "reference is constant after mean removal");
  }
  double alpha = k.reduce_dot(e.data(), r.data(), n) / rr;
  double projection = alpha * alpha * rr;
  if (projection == 0.0) {
    throw Error(ErrorCode::kOrthogonalEstimate,
                "estimate is orthogonal to the reference");
  }
  double residual = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double d = e[i] - alpha * r[i];
    residual += d * d;
  }
  if (residual <= kPerfectResidualRatio * projection) {
    return {std::numeric_limits<double>::infinity(), true};
  }
  return {10.0 * std::log10(projection / residual), false};
}

MetricReport compute_metrics(const AudioClip& est, const AudioClip& ref) {
  return {snr(est, ref), si_snr(est, ref)};
}

}  // namespace loudloss
