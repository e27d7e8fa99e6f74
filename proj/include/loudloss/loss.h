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

#ifndef LOUDLOSS_LOSS_H_
#define LOUDLOSS_LOSS_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "loudloss/melbands.h"
#include "loudloss/spectrum.h"
#include "loudloss/types.h"
#include "loudloss/weights.h"

namespace loudloss {

// Which values feed the sub-band squared differences.
enum class LossDomain { kLogPower, kLinearMagnitude };

// How sub-band (or per-bin) errors are weighted.
enum class BandWeighting { kEqualLoudness, kUniform, kPerBin };

struct LossConfig {
  LossDomain domain = LossDomain::kLogPower;
  BandWeighting weighting = BandWeighting::kEqualLoudness;
  // Required for banded weightings; must be absent for kPerBin, which
  // weights every FFT bin individually instead of forming bands.
  std::optional<PartitionConfig> partition = PartitionConfig{};
  double floor_db = kDefaultFloorDb;
};

struct BandLoss {
  size_t band = 0;
  double loss = 0.0;    // mean squared difference within the band
  double weight = 1.0;
  double center_hz = 0.0;
};

struct LossReport {
  double total = 0.0;
  std::vector<BandLoss> per_band;  // empty for per-bin weighting
  LossConfig config;
  StftConfig stft;
  int sample_rate = 0;
};

// Mean squared difference over one band: the band's bins are averaged over
// all frames, (1 / (width * frames)) * sum of squared differences.
// Accumulation order is fixed: frames outer, bins inner.
double subband_loss(const SpectrumGrid& est, const SpectrumGrid& ref,
                    BinRange band);

// Weighted sum of sub-band losses over a partition (a sum, not a mean).
// Fills total and per_band; config/stft echo is stamped by evaluate().
LossReport loud_loss(const SpectrumGrid& est, const SpectrumGrid& ref,
                     const BandPartition& partition,
                     const WeightVector& weights);

// d(total)/d(est(f, t)): each band containing f contributes
// weight * 2 * (est - ref) / (width * frames).
GradientField loud_loss_gradient(const SpectrumGrid& est,
                                 const SpectrumGrid& ref,
                                 const BandPartition& partition,
                                 const WeightVector& weights);

// Global mean of bin_weights[f] * (est - ref)^2 (bands unused).
double per_bin_loss(const SpectrumGrid& est, const SpectrumGrid& ref,
                    const std::vector<double>& bin_weights);
GradientField per_bin_loss_gradient(const SpectrumGrid& est,
                                    const SpectrumGrid& ref,
                                    const std::vector<double>& bin_weights);

// Plain global mean squared difference.
double mse_loss(const SpectrumGrid& est, const SpectrumGrid& ref);
GradientField mse_loss_gradient(const SpectrumGrid& est,
                                const SpectrumGrid& ref);

// MSE between power-compressed magnitudes, mean of (est^alpha - ref^alpha)^2
// with alpha in (0, 1]. alpha = 1 short-circuits to mse_loss exactly.
double compressed_loss(const MagnitudeSpectrum& est,
                       const MagnitudeSpectrum& ref, double alpha);

// Full pipeline: STFT both clips, map to the configured domain, apply the
// configured weighting. Clips must have equal lengths and sample rates, and
// a partition (when present) must agree with the STFT size and sample rate.
LossReport evaluate(const AudioClip& est, const AudioClip& ref,
                    const StftConfig& stft, const LossConfig& config);

}  // namespace loudloss

#endif  // LOUDLOSS_LOSS_H_
