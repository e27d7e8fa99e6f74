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

#include "loudloss/melbands.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "loudloss/error.h"

namespace loudloss {

double hz_to_mel(double hz) {
  if (hz < 0.0) {
    throw Error(ErrorCode::kNegativeFrequency,
                "frequency must be non-negative");
  }
  return 2595.0 * std::log10(1.0 + hz / 700.0);
}

double mel_to_hz(double mel) {
  if (mel < 0.0) {
    throw Error(ErrorCode::kNegativeMel, "mel value must be non-negative");
  }
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

namespace {

void validate(const PartitionConfig& config) {
  if (config.num_bands < 1) {
    throw Error(ErrorCode::kInvalidConfig, "num_bands must be at least 1");
  }
  if (config.sample_rate <= 0 || config.fft_size < 2) {
    throw Error(ErrorCode::kInvalidConfig,
                "sample_rate and fft_size must be positive");
  }
  if (config.f_min_hz < 0.0) {
    throw Error(ErrorCode::kNegativeFrequency, "f_min_hz must be >= 0");
  }
  double nyquist = static_cast<double>(config.sample_rate) / 2.0;
  if (!(config.f_min_hz < config.f_max_hz) || config.f_max_hz > nyquist) {
    throw Error(ErrorCode::kInvalidConfig,
                "need f_min_hz < f_max_hz <= sample_rate/2");
  }
}

size_t hz_to_bin(double hz, const PartitionConfig& config, size_t num_bins) {
  double bin = std::floor(hz * static_cast<double>(config.fft_size) /
                          static_cast<double>(config.sample_rate));
  if (bin < 0.0) {
    bin = 0.0;
  }
  return std::min(static_cast<size_t>(bin), num_bins);
}

}  // namespace

BandPartition build_partition(const PartitionConfig& config) {
  validate(config);

  BandPartition partition;
  partition.config = config;
  size_t num_bands = static_cast<size_t>(config.num_bands);
  size_t num_boundaries =
      config.overlap == BandOverlap::kHalf ? num_bands + 2 : num_bands + 1;
  size_t num_bins = partition.num_bins();

  // Boundary positions equispaced on the working scale; the endpoints are
  // pinned to f_min/f_max exactly so bin mapping does not wobble through a
  // scale round trip.
  std::vector<double> scale_pos(num_boundaries);
  double lo = config.scale == BandScale::kMel ? hz_to_mel(config.f_min_hz)
                                              : config.f_min_hz;
  double hi = config.scale == BandScale::kMel ? hz_to_mel(config.f_max_hz)
                                              : config.f_max_hz;
  partition.boundaries_hz.resize(num_boundaries);
  for (size_t i = 0; i < num_boundaries; ++i) {
    double s = lo + (hi - lo) * static_cast<double>(i) /
                        static_cast<double>(num_boundaries - 1);
    scale_pos[i] = s;
    if (i == 0) {
      partition.boundaries_hz[i] = config.f_min_hz;
    } else if (i == num_boundaries - 1) {
      partition.boundaries_hz[i] = config.f_max_hz;
    } else {
      partition.boundaries_hz[i] =
          config.scale == BandScale::kMel ? mel_to_hz(s) : s;
    }
  }

  partition.boundary_bins.resize(num_boundaries);
  for (size_t i = 0; i < num_boundaries; ++i) {
    partition.boundary_bins[i] =
        hz_to_bin(partition.boundaries_hz[i], config, num_bins);
  }
  // At Nyquist the top boundary is one past the last bin so the final band
  // includes it.
  if (config.f_max_hz ==
      static_cast<double>(config.sample_rate) / 2.0) {
    partition.boundary_bins.back() = num_bins;
  }

  partition.bands.resize(num_bands);
  partition.centers_hz.resize(num_bands);
  const auto& k = partition.boundary_bins;
  for (size_t i = 0; i < num_bands; ++i) {
    size_t end = config.overlap == BandOverlap::kHalf ? k[i + 2] : k[i + 1];
    partition.bands[i] = {k[i], end};
    if (partition.bands[i].width() == 0) {
      throw Error(ErrorCode::kDegenerateBand,
                  "band " + std::to_string(i) +
                      " covers no bins; reduce num_bands or raise fft_size");
    }
    if (config.overlap == BandOverlap::kHalf) {
      partition.centers_hz[i] = partition.boundaries_hz[i + 1];
    } else {
      double mid = 0.5 * (scale_pos[i] + scale_pos[i + 1]);
      partition.centers_hz[i] =
          config.scale == BandScale::kMel ? mel_to_hz(mid) : mid;
    }
  }
  return partition;
}

std::vector<size_t> bin_membership(const BandPartition& partition,
                                   size_t bin) {
  if (bin >= partition.num_bins()) {
    throw Error(ErrorCode::kBinOutOfRange,
                "bin " + std::to_string(bin) + " out of range");
  }
  // Only the band starting at the last boundary <= bin and the one before it
  // can contain bin; boundary bins are non-decreasing.
  const auto& k = partition.boundary_bins;
  auto it = std::upper_bound(k.begin(), k.end(), bin);
  std::vector<size_t> result;
  if (it == k.begin()) {
    return result;  // below the covered range
  }
  size_t j = static_cast<size_t>(it - k.begin()) - 1;
  size_t first = j >= 1 ? j - 1 : 0;
  for (size_t i = first; i <= j && i < partition.bands.size(); ++i) {
    if (partition.bands[i].begin <= bin && bin < partition.bands[i].end) {
      result.push_back(i);
    }
  }
  return result;
}

}  // namespace loudloss
