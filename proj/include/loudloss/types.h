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

#ifndef LOUDLOSS_TYPES_H_
#define LOUDLOSS_TYPES_H_

#include <cstddef>
#include <vector>

namespace loudloss {

// Mono waveform. Samples are real amplitudes, nominally in [-1, 1).
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = 16000;
};

// Dense bins-by-frames matrix shared by magnitude spectra, log-power spectra
// and gradient fields. Storage is frame-major: frame t occupies the
// contiguous slice data[t * num_bins .. (t + 1) * num_bins), so per-frame
// kernels operate on contiguous memory.
struct SpectrumGrid {
  size_t num_bins = 0;    // frequency bins per frame (F)
  size_t num_frames = 0;  // analysis frames (T)
  std::vector<double> data;

  SpectrumGrid() = default;
  SpectrumGrid(size_t bins, size_t frames)
      : num_bins(bins), num_frames(frames), data(bins * frames, 0.0) {}

  double& at(size_t bin, size_t frame) { return data[frame * num_bins + bin]; }
  double at(size_t bin, size_t frame) const {
    return data[frame * num_bins + bin];
  }
  double* frame(size_t t) { return data.data() + t * num_bins; }
  const double* frame(size_t t) const { return data.data() + t * num_bins; }
  size_t size() const { return data.size(); }
  bool same_shape(const SpectrumGrid& other) const {
    return num_bins == other.num_bins && num_frames == other.num_frames;
  }
};

// STFT magnitudes, |X(f, t)| >= 0. freq_bin_hz is the width of one bin.
struct MagnitudeSpectrum {
  SpectrumGrid grid;
  double freq_bin_hz = 0.0;
};

// Log-power spectrum in dB, clamped from below at floor_db.
struct LogPowerSpectrum {
  SpectrumGrid grid;
  double floor_db = -80.0;
};

// Partial derivatives of a scalar loss with respect to every grid entry.
struct GradientField {
  SpectrumGrid grid;
};

// Half-open bin interval [begin, end).
struct BinRange {
  size_t begin = 0;
  size_t end = 0;
  size_t width() const { return end - begin; }
};

}  // namespace loudloss

#endif  // LOUDLOSS_TYPES_H_
