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

#ifndef LOUDLOSS_METRICS_H_
#define LOUDLOSS_METRICS_H_

#include "loudloss/types.h"

namespace loudloss {

// A dB value with a distinguished "perfect" state for error-free estimates;
// perfect results never serialize as a float infinity.
struct SnrResult {
  double db = 0.0;
  bool perfect = false;
};

// 10*log10(sum ref^2 / sum (ref - est)^2). Zero error yields the perfect
// sentinel; an all-zero reference raises kSilentReference, mismatched
// lengths kLengthMismatch.
SnrResult snr(const AudioClip& est, const AudioClip& ref);

// Scale-invariant SNR: both signals are mean-removed, est is projected onto
// ref (s = (<est,ref>/<ref,ref>) ref) and the result is
// 10*log10(sum s^2 / sum (est - s)^2). The estimate is pre-normalized by its
// own largest magnitude, which makes the value exactly invariant under any
// est rescaling whose products round exactly (and invariant to double
// fidelity otherwise). A zero projection raises kOrthogonalEstimate;
// residual energy at or below 1e-24 of the projection energy reports
// perfect.
SnrResult si_snr(const AudioClip& est, const AudioClip& ref);

struct MetricReport {
  SnrResult snr;
  SnrResult si_snr;
};

MetricReport compute_metrics(const AudioClip& est, const AudioClip& ref);

}  // namespace loudloss

#endif  // LOUDLOSS_METRICS_H_
