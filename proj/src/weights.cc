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

#include "loudloss/weights.h"

#include <algorithm>
#include <cmath>

#include "loudloss/error.h"

namespace loudloss {

const LoudnessContour& default_contour() {
  static const LoudnessContour contour = {{
      {20.0, 99.85},   {25.0, 93.94},   {31.5, 88.17},  {40.0, 82.63},
      {50.0, 77.78},   {63.0, 73.08},   {80.0, 68.48},  {100.0, 64.37},
      {125.0, 60.59},  {160.0, 56.70},  {200.0, 53.41}, {250.0, 50.40},
      {315.0, 47.58},  {400.0, 44.98},  {500.0, 43.05}, {630.0, 41.34},
      {800.0, 40.06},  {1000.0, 40.01}, {1250.0, 41.82}, {1600.0, 42.51},
      {2000.0, 39.23}, {2500.0, 36.51}, {3150.0, 35.61}, {4000.0, 36.65},
      {5000.0, 40.01}, {6300.0, 45.83}, {8000.0, 51.80}, {10000.0, 54.28},
      {12500.0, 51.49},
  }};
  return contour;
}

const ContourPoint& nearest_contour_entry(const LoudnessContour& contour,
                                          double hz) {
  if (hz < 0.0) {
    throw Error(ErrorCode::kNegativeFrequency,
                "frequency must be non-negative");
  }
  if (contour.entries.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "contour has no entries");
  }
  const auto& e = contour.entries;
  auto it = std::lower_bound(
      e.begin(), e.end(), hz,
      [](const ContourPoint& p, double f) { return p.frequency_hz < f; });
  if (it == e.begin()) {
    return e.front();
  }
  if (it == e.end()) {
    return e.back();
  }
  const ContourPoint& hi = *it;
  const ContourPoint& lo = *(it - 1);
  // Ties go to the lower frequency.
  return (hz - lo.frequency_hz) <= (hi.frequency_hz - hz) ? lo : hi;
}

double spl_lookup(const LoudnessContour& contour, double hz) {
  return nearest_contour_entry(contour, hz).spl_db;
}

WeightVector compute_weights(const LoudnessContour& contour,
                             const BandPartition& partition) {
  WeightVector weights;
  weights.w.reserve(partition.centers_hz.size());
  for (double center : partition.centers_hz) {
    weights.w.push_back(kReferenceSpl / spl_lookup(contour, center));
  }
  return weights;
}

WeightVector uniform_weights(size_t num_bands) {
  WeightVector weights;
  weights.w.assign(num_bands, 1.0);
  return weights;
}

std::vector<double> per_bin_weights(const LoudnessContour& contour,
                                    size_t num_bins, int sample_rate,
                                    int fft_size) {
  if (contour.entries.size() < 2) {
    throw Error(ErrorCode::kInvalidConfig, "contour needs two entries");
  }
  if (num_bins == 0 || sample_rate <= 0 || fft_size < 2) {
    throw Error(ErrorCode::kInvalidConfig, "bad per-bin weight request");
  }
  const auto& e = contour.entries;
  std::vector<double> weights(num_bins);
  for (size_t b = 0; b < num_bins; ++b) {
    double hz = static_cast<double>(b) * static_cast<double>(sample_rate) /
                static_cast<double>(fft_size);
    double spl;
    if (hz <= e.front().frequency_hz) {
      spl = e.front().spl_db;
    } else if (hz >= e.back().frequency_hz) {
      spl = e.back().spl_db;
    } else {
      auto it = std::lower_bound(
          e.begin(), e.end(), hz,
          [](const ContourPoint& p, double f) { return p.frequency_hz < f; });
      const ContourPoint& hi = *it;
      const ContourPoint& lo = *(it - 1);
      if (hi.frequency_hz == hz) {
        spl = hi.spl_db;
      } else {
        double t = (std::log(hz) - std::log(lo.frequency_hz)) /
                   (std::log(hi.frequency_hz) - std::log(lo.frequency_hz));
        spl = lo.spl_db + t * (hi.spl_db - lo.spl_db);
      }
    }
    weights[b] = kReferenceSpl / spl;
  }
  return weights;
}

}  // namespace loudloss
