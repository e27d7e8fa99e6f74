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

#ifndef LOUDLOSS_MELBANDS_H_
#define LOUDLOSS_MELBANDS_H_

#include <cstddef>
#include <vector>

#include "loudloss/types.h"

namespace loudloss {

// mel = 2595 * log10(1 + hz/700). Monotone, 0 at 0 Hz. Throws
// kNegativeFrequency / kNegativeMel on negative input.
double hz_to_mel(double hz);
double mel_to_hz(double mel);

enum class BandScale { kMel, kUniformHz };
enum class BandOverlap { kHalf, kNone };

struct PartitionConfig {
  int num_bands = 25;
  double f_min_hz = 0.0;
  double f_max_hz = 8000.0;
  int sample_rate = 16000;
  int fft_size = 512;
  BandScale scale = BandScale::kMel;
  BandOverlap overlap = BandOverlap::kHalf;
};

// A frequency partition mapped onto FFT bins.
//
// Boundaries are equispaced on the chosen scale: num_bands + 2 of them for
// half overlap, where band i spans boundary bins [k[i], k[i+2]) and its
// center is boundary i+1; num_bands + 1 of them (re-spaced over the same
// range) for no overlap, where band i spans [k[i], k[i+1]) and its center is
// the scale midpoint of its two boundaries. Boundary bins are
// floor(f * fft_size / sample_rate), with the top boundary landing one past
// the last bin when f_max is the Nyquist frequency. Every band must cover at
// least one bin; otherwise construction fails with kDegenerateBand.
struct BandPartition {
  PartitionConfig config;
  std::vector<double> boundaries_hz;
  std::vector<size_t> boundary_bins;
  std::vector<BinRange> bands;      // num_bands entries
  std::vector<double> centers_hz;   // num_bands entries

  size_t num_bins() const {
    return static_cast<size_t>(config.fft_size) / 2 + 1;
  }
};

BandPartition build_partition(const PartitionConfig& config);

// Indices of the bands containing bin, in increasing order. At most two
// bands overlap anywhere by construction. Throws kBinOutOfRange when bin is
// not a valid bin index for the partition's FFT size.
std::vector<size_t> bin_membership(const BandPartition& partition, size_t bin);

}  // namespace loudloss

#endif  // LOUDLOSS_MELBANDS_H_
