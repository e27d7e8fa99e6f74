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

#include "loudloss/loss.h"

#include <cmath>
#include <string>

#include "loudloss/error.h"
#include "loudloss/kernels.h"

namespace loudloss {
namespace {

void check_shapes(const SpectrumGrid& est, const SpectrumGrid& ref) {
  if (!est.same_shape(ref)) {
    throw Error(ErrorCode::kShapeMismatch,
                "estimate and reference spectra have different shapes");
  }
  if (est.num_bins == 0 || est.num_frames == 0) {
    throw Error(ErrorCode::kShapeMismatch, "empty spectrum");
  }
}

void check_partition(const SpectrumGrid& grid, const BandPartition& partition) {
  if (partition.num_bins() != grid.num_bins) {
    throw Error(ErrorCode::kShapeMismatch,
                "partition was built for a different FFT size");
  }
}

}  // namespace

double subband_loss(const SpectrumGrid& est, const SpectrumGrid& ref,
                    BinRange band) {
  check_shapes(est, ref);
  if (band.begin >= band.end) {
    throw Error(ErrorCode::kEmptyBand, "band covers no bins");
  }
  if (band.end > est.num_bins) {
    throw Error(ErrorCode::kBinOutOfRange, "band exceeds spectrum bins");
  }
  const kernels::Backend& k = kernels::active();
  double acc = 0.0;
  for (size_t t = 0; t < est.num_frames; ++t) {
    acc += k.reduce_sq_diff(est.frame(t) + band.begin,
                            ref.frame(t) + band.begin, band.width());
  }
  return acc / (static_cast<double>(band.width()) *
                static_cast<double>(est.num_frames));
}

LossReport loud_loss(const SpectrumGrid& est, const SpectrumGrid& ref,
                     const BandPartition& partition,
                     const WeightVector& weights) {
  check_shapes(est, ref);
  check_partition(est, partition);
  if (weights.w.size() != partition.bands.size()) {
    throw Error(ErrorCode::kWeightCountMismatch,
                std::to_string(weights.w.size()) + " weights for " +
                    std::to_string(partition.bands.size()) + " bands");
  }

  LossReport report;
  report.per_band.reserve(partition.bands.size());
  double total = 0.0;
  for (size_t i = 0; i < partition.bands.size(); ++i) {
    double band_loss = subband_loss(est, ref, partition.bands[i]);
    total += weights.w[i] * band_loss;
    report.per_band.push_back(
        {i, band_loss, weights.w[i], partition.centers_hz[i]});
  }
  report.total = total;
  return report;
}

GradientField loud_loss_gradient(const SpectrumGrid& est,
                                 const SpectrumGrid& ref,
                                 const BandPartition& partition,
                                 const WeightVector& weights) {
  check_shapes(est, ref);
  check_partition(est, partition);
  if (weights.w.size() != partition.bands.size()) {
    throw Error(ErrorCode::kWeightCountMismatch,
                std::to_string(weights.w.size()) + " weights for " +
                    std::to_string(partition.bands.size()) + " bands");
  }
  const kernels::Backend& k = kernels::active();
  GradientField grad;
  grad.grid = SpectrumGrid(est.num_bins, est.num_frames);
  for (size_t i = 0; i < partition.bands.size(); ++i) {
    const BinRange& band = partition.bands[i];
    double scale = 2.0 * weights.w[i] /
                   (static_cast<double>(band.width()) *
                    static_cast<double>(est.num_frames));
    for (size_t t = 0; t < est.num_frames; ++t) {
      k.accumulate_scaled_diff(grad.grid.frame(t) + band.begin,
                               est.frame(t) + band.begin,
                               ref.frame(t) + band.begin, scale, band.width());
    }
  }
  return grad;
}

double per_bin_loss(const SpectrumGrid& est, const SpectrumGrid& ref,
                    const std::vector<double>& bin_weights) {
  check_shapes(est, ref);
  if (bin_weights.size() != est.num_bins) {
    throw Error(ErrorCode::kWeightCountMismatch,
                "need one weight per FFT bin");
  }
  const kernels::Backend& k = kernels::active();
  double acc = 0.0;
  for (size_t t = 0; t < est.num_frames; ++t) {
    acc += k.reduce_weighted_sq_diff(est.frame(t), ref.frame(t),
                                     bin_weights.data(), est.num_bins);
  }
  return acc / (static_cast<double>(est.num_bins) *
                static_cast<double>(est.num_frames));
}

GradientField per_bin_loss_gradient(const SpectrumGrid& est,
                                    const SpectrumGrid& ref,
                                    const std::vector<double>& bin_weights) {
  check_shapes(est, ref);
  if (bin_weights.size() != est.num_bins) {
    throw Error(ErrorCode::kWeightCountMismatch,
                "need one weight per FFT bin");
  }
  GradientField grad;
  grad.grid = SpectrumGrid(est.num_bins, est.num_frames);
  double norm = 2.0 / (static_cast<double>(est.num_bins) *
                       static_cast<double>(est.num_frames));
  for (size_t t = 0; t < est.num_frames; ++t) {
    const double* e = est.frame(t);
    const double* r = ref.frame(t);
    double* g = grad.grid.frame(t);
    for (size_t f = 0; f < est.num_bins; ++f) {
      g[f] = norm * bin_weights[f] * (e[f] - r[f]);
    }
  }
  return grad;
}

double mse_loss(const SpectrumGrid& est, const SpectrumGrid& ref) {
  check_shapes(est, ref);
  double acc = kernels::active().reduce_sq_diff(est.data.data(),
                                                ref.data.data(), est.size());
  return acc / static_cast<double>(est.size());
}

GradientField mse_loss_gradient(const SpectrumGrid& est,
                                const SpectrumGrid& ref) {
  check_shapes(est, ref);
  GradientField grad;
  grad.grid = SpectrumGrid(est.num_bins, est.num_frames);
  kernels::active().accumulate_scaled_diff(
      grad.grid.data.data(), est.data.data(), ref.data.data(),
      2.0 / static_cast<double>(est.size()), est.size());
  return grad;
}

double compressed_loss(const MagnitudeSpectrum& est,
                       const MagnitudeSpectrum& ref, double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw Error(ErrorCode::kInvalidAlpha, "alpha must be in (0, 1]");
  }
  check_shapes(est.grid, ref.grid);
  if (alpha == 1.0) {
    return mse_loss(est.grid, ref.grid);
  }
  SpectrumGrid ce(est.grid.num_bins, est.grid.num_frames);
  SpectrumGrid cr(est.grid.num_bins, est.grid.num_frames);
  for (size_t i = 0; i < est.grid.size(); ++i) {
    ce.data[i] = std::pow(est.grid.data[i], alpha);
    cr.data[i] = std::pow(ref.grid.data[i], alpha);
  }
  return mse_loss(ce, cr);
}

LossReport evaluate(const AudioClip& est, const AudioClip& ref,
                    const StftConfig& stft, const LossConfig& config) {
  if (est.samples.size() != ref.samples.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "length mismatch: estimate has " +
                    std::to_string(est.samples.size()) +
                    " samples, reference has " +
                    std::to_string(ref.samples.size()));
  }
  if (est.sample_rate != ref.sample_rate) {
    throw Error(ErrorCode::kSampleRateMismatch,
                "clips have different sample rates");
  }
  bool banded = config.weighting != BandWeighting::kPerBin;
  if (banded && !config.partition.has_value()) {
    throw Error(ErrorCode::kInvalidConfig,
                "banded weighting requires a partition");
  }
  if (!banded && config.partition.has_value()) {
    throw Error(ErrorCode::kInvalidConfig,
                "per-bin weighting does not use a partition");
  }
  if (config.partition.has_value()) {
    if (config.partition->fft_size != static_cast<int>(stft.window_length) ||
        config.partition->sample_rate != est.sample_rate) {
      throw Error(ErrorCode::kInvalidConfig,
                  "partition fft_size/sample_rate must match the analysis");
    }
  }

  MagnitudeSpectrum est_mag = stft_magnitude(est, stft);
  MagnitudeSpectrum ref_mag = stft_magnitude(ref, stft);

  const SpectrumGrid* est_grid = &est_mag.grid;
  const SpectrumGrid* ref_grid = &ref_mag.grid;
  LogPowerSpectrum est_lp;
  LogPowerSpectrum ref_lp;
  if (config.domain == LossDomain::kLogPower) {
    est_lp = to_log_power(est_mag, config.floor_db);
    ref_lp = to_log_power(ref_mag, config.floor_db);
    est_grid = &est_lp.grid;
    ref_grid = &ref_lp.grid;
  }

  LossReport report;
  if (banded) {
    BandPartition partition = build_partition(*config.partition);
    WeightVector weights = config.weighting == BandWeighting::kEqualLoudness
                               ? compute_weights(default_contour(), partition)
                               : uniform_weights(partition.bands.size());
    report = loud_loss(*est_grid, *ref_grid, partition, weights);
  } else {
    std::vector<double> bin_weights =
        per_bin_weights(default_contour(), est_grid->num_bins,
                        est.sample_rate, static_cast<int>(stft.window_length));
    report.total = per_bin_loss(*est_grid, *ref_grid, bin_weights);
  }
  report.config = config;
  report.stft = stft;
  report.sample_rate = est.sample_rate;
  return report;
}

}  // namespace loudloss
