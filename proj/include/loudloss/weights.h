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

#ifndef LOUDLOSS_WEIGHTS_H_
#define LOUDLOSS_WEIGHTS_H_

#include <cstddef>
#include <vector>

#include "loudloss/melbands.h"

namespace loudloss {

// One equal-loudness contour sample: the sound pressure level a pure tone at
// frequency_hz needs to sound as loud as the reference tone.
struct ContourPoint {
  double frequency_hz;
  double spl_db;
};

struct LoudnessContour {
  std::vector<ContourPoint> entries;  // strictly increasing frequencies
};

// SPL of the 1 kHz reference tone on the 40-phon contour. Weights are always
// expressed relative to this anchor, so uniformly rescaling a contour's SPL
// entries by c rescales every weight (and the weighted loss) by exactly 1/c.
inline constexpr double kReferenceSpl = 40.01;

// 40-phon equal-loudness contour, 29 samples from 20 Hz to 12.5 kHz.
const LoudnessContour& default_contour();

// Contour entry nearest to hz in linear frequency; ties resolve toward the
// lower frequency and queries outside the table snap to its endpoints.
const ContourPoint& nearest_contour_entry(const LoudnessContour& contour,
                                          double hz);

// SPL of the nearest contour entry.
double spl_lookup(const LoudnessContour& contour, double hz);

// One weight per band.
struct WeightVector {
  std::vector<double> w;
  double reference_spl = kReferenceSpl;
};

// w[i] = kReferenceSpl / spl_lookup(centers_hz[i]): bands whose contour SPL
// is low (sensitive frequencies) weigh more than 1, insensitive ones less.
WeightVector compute_weights(const LoudnessContour& contour,
                             const BandPartition& partition);

// All-ones weights for the unweighted ablation.
WeightVector uniform_weights(size_t num_bands);

// Per-FFT-bin weights for the band-free ablation: the contour is
// interpolated linearly in (log frequency, dB) between entries, clamped to
// the endpoint values outside [20, 12500] Hz (bin 0 at 0 Hz uses the 20 Hz
// endpoint). Returns num_bins values, bin b at frequency
// b * sample_rate / fft_size.
std::vector<double> per_bin_weights(const LoudnessContour& contour,
                                    size_t num_bins, int sample_rate,
                                    int fft_size);

}  // namespace loudloss

#endif  // LOUDLOSS_WEIGHTS_H_
