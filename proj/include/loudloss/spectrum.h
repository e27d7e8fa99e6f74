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

#ifndef LOUDLOSS_SPECTRUM_H_
#define LOUDLOSS_SPECTRUM_H_

#include <cstddef>
#include <vector>

#include "loudloss/types.h"

namespace loudloss {

// Additive guard inside the log so silent bins stay finite.
inline constexpr double kLogEpsilon = 1e-8;
// Default lower clamp for log-power values, in dB.
inline constexpr double kDefaultFloorDb = -80.0;
// d/dm of 20*log10(m) is (20/ln 10)/m; the constant is 20/ln 10.
inline constexpr double kDbPerNeper = 8.685889638065035;

// Analysis framing. The FFT size equals the window length and frames are
// taken without center padding: frame t covers samples
// [t*hop_length, t*hop_length + window_length).
struct StftConfig {
  size_t window_length = 512;
  size_t hop_length = 256;
};

// Periodic Hann window: w[n] = 0.5 - 0.5*cos(2*pi*n/n_points).
std::vector<double> periodic_hann(size_t n_points);

// Number of frames an input of sample_count yields, or 0 if too short.
size_t frame_count(size_t sample_count, const StftConfig& config);

// Windowed one-sided STFT magnitudes: window_length/2 + 1 bins per frame.
// Throws kClipTooShort if the clip holds fewer samples than one window and
// kInvalidConfig for an empty window or hop outside (0, window_length].
MagnitudeSpectrum stft_magnitude(const AudioClip& clip,
                                 const StftConfig& config);

// P(f, t) = max(20*log10(|M(f, t)| + kLogEpsilon), floor_db).
LogPowerSpectrum to_log_power(const MagnitudeSpectrum& magnitude,
                              double floor_db = kDefaultFloorDb);

// Pulls a gradient with respect to log-power values back to a gradient with
// respect to magnitudes: dP/dM = (20/ln 10)/(M + kLogEpsilon) where the
// pre-clamp value exceeds floor_db, and exactly 0 in the clamped region.
GradientField log_power_gradient_chain(const MagnitudeSpectrum& magnitude,
                                       const GradientField& grad_log_power,
                                       double floor_db = kDefaultFloorDb);

}  // namespace loudloss

#endif  // LOUDLOSS_SPECTRUM_H_
