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

#include "loudloss/spectrum.h"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "fft.h"
#include "loudloss/error.h"
#include "loudloss/kernels.h"

namespace loudloss {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void validate(const StftConfig& config) {
  if (config.window_length < 2) {
    throw Error(ErrorCode::kInvalidConfig, "window_length must be at least 2");
  }
  if (config.hop_length == 0 || config.hop_length > config.window_length) {
    throw Error(ErrorCode::kInvalidConfig,
                "hop_length must be in (0, window_length]");
  }
}

}  // namespace

std::vector<double> periodic_hann(size_t n_points) {
  std::vector<double> w(n_points);
  for (size_t n = 0; n < n_points; ++n) {
    w[n] = 0.5 - 0.5 * std::cos(kTwoPi * static_cast<double>(n) /
                                static_cast<double>(n_points));
  }
  return w;
}

size_t frame_count(size_t sample_count, const StftConfig& config) {
  validate(config);
  if (sample_count < config.window_length) {
    return 0;
  }
  return (sample_count - config.window_length) / config.hop_length + 1;
}

MagnitudeSpectrum stft_magnitude(const AudioClip& clip,
                                 const StftConfig& config) {
  validate(config);
  size_t n = config.window_length;
  size_t frames = frame_count(clip.samples.size(), config);
  if (frames == 0) {
    throw Error(ErrorCode::kClipTooShort,
                "clip has " + std::to_string(clip.samples.size()) +
                    " samples, need at least " + std::to_string(n));
  }

  const kernels::Backend& k = kernels::active();
  std::vector<double> window = periodic_hann(n);
  std::vector<double> frame(n);
  std::vector<std::complex<double>> bins(n / 2 + 1);
  Fft fft(n);

  MagnitudeSpectrum result;
  result.freq_bin_hz =
      static_cast<double>(clip.sample_rate) / static_cast<double>(n);
  result.grid = SpectrumGrid(n / 2 + 1, frames);
  for (size_t t = 0; t < frames; ++t) {
    const double* src = clip.samples.data() + t * config.hop_length;
    k.multiply(src, window.data(), frame.data(), n);
    fft.forward_real(frame.data(), bins.data());
    k.complex_magnitude(reinterpret_cast<const double*>(bins.data()),
                        result.grid.frame(t), n / 2 + 1);
  }
  return result;
}

LogPowerSpectrum to_log_power(const MagnitudeSpectrum& magnitude,
                              double floor_db) {
  if (!std::isfinite(floor_db)) {
    throw Error(ErrorCode::kInvalidConfig, "floor_db must be finite");
  }
  LogPowerSpectrum out;
  out.floor_db = floor_db;
  out.grid = SpectrumGrid(magnitude.grid.num_bins, magnitude.grid.num_frames);
  for (size_t i = 0; i < magnitude.grid.size(); ++i) {
    double db = 20.0 * std::log10(magnitude.grid.data[i] + kLogEpsilon);
    out.grid.data[i] = db > floor_db ? db : floor_db;
  }
  return out;
}

GradientField log_power_gradient_chain(const MagnitudeSpectrum& magnitude,
                                       const GradientField& grad_log_power,
                                       double floor_db) {
  if (!magnitude.grid.same_shape(grad_log_power.grid)) {
    throw Error(ErrorCode::kShapeMismatch,
                "magnitude and gradient shapes differ");
  }
  GradientField out;
  out.grid = SpectrumGrid(magnitude.grid.num_bins, magnitude.grid.num_frames);
  for (size_t i = 0; i < magnitude.grid.size(); ++i) {
    double m = magnitude.grid.data[i] + kLogEpsilon;
    // Same comparison the forward clamp uses, so the dead zone matches it.
    double db = 20.0 * std::log10(m);
    out.grid.data[i] =
        db > floor_db ? grad_log_power.grid.data[i] * (kDbPerNeper / m) : 0.0;
  }
  return out;
}

}  // namespace loudloss
