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

#include "loudloss/trainer.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "loudloss/error.h"
#include "loudloss/kernels.h"
#include "loudloss/weights.h"

namespace loudloss {
namespace {

constexpr size_t kSynthBins = 257;       // 512-point analysis, one-sided
constexpr double kSynthBinHz = 31.25;    // 16 kHz / 512
constexpr size_t kHarmonicStride = 10;   // comb spacing in bins (312.5 Hz)

// Uniform double in [0, 1) from the engine's full 64-bit output; the
// explicit conversion keeps the stream identical everywhere.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

MagnitudeSpectrum apply_gains(const GainModel& model,
                              const MagnitudeSpectrum& noisy) {
  const kernels::Backend& k = kernels::active();
  MagnitudeSpectrum est;
  est.freq_bin_hz = noisy.freq_bin_hz;
  est.grid = SpectrumGrid(noisy.grid.num_bins, noisy.grid.num_frames);
  for (size_t t = 0; t < noisy.grid.num_frames; ++t) {
    k.multiply(noisy.grid.frame(t), model.gains.data(), est.grid.frame(t),
               noisy.grid.num_bins);
  }
  return est;
}

void check_model(const GainModel& model, const SynthDataset& data) {
  if (model.gains.size() != data.noisy.grid.num_bins) {
    throw Error(ErrorCode::kShapeMismatch,
                "gain model size does not match the spectrum bins");
  }
  for (double g : model.gains) {
    if (!(g >= 0.0)) {
      throw Error(ErrorCode::kInvalidConfig, "gains must be non-negative");
    }
  }
}

// Loss and dL/dM for the estimated magnitudes under the objective.
struct LossAndGrad {
  double loss = 0.0;
  GradientField grad_magnitude;
};

LossAndGrad eval_objective(const MagnitudeSpectrum& est_mag,
                           const SynthDataset& data,
                           const TrainObjective& objective) {
  const LossConfig& cfg = objective.loss_config;
  LossAndGrad out;

  if (objective.kind == TrainObjective::Kind::kLogPowerMse) {
    LogPowerSpectrum est_lp = to_log_power(est_mag, cfg.floor_db);
    LogPowerSpectrum ref_lp = to_log_power(data.clean, cfg.floor_db);
    out.loss = mse_loss(est_lp.grid, ref_lp.grid);
    GradientField grad_lp = mse_loss_gradient(est_lp.grid, ref_lp.grid);
    out.grad_magnitude =
        log_power_gradient_chain(est_mag, grad_lp, cfg.floor_db);
    return out;
  }

  bool banded = cfg.weighting != BandWeighting::kPerBin;
  if (banded && !cfg.partition.has_value()) {
    throw Error(ErrorCode::kInvalidConfig,
                "banded weighting requires a partition");
  }
  if (!banded && cfg.partition.has_value()) {
    throw Error(ErrorCode::kInvalidConfig,
                "per-bin weighting does not use a partition");
  }

  const SpectrumGrid* est_grid = &est_mag.grid;
  const SpectrumGrid* ref_grid = &data.clean.grid;
  LogPowerSpectrum est_lp;
  LogPowerSpectrum ref_lp;
  if (cfg.domain == LossDomain::kLogPower) {
    est_lp = to_log_power(est_mag, cfg.floor_db);
    ref_lp = to_log_power(data.clean, cfg.floor_db);
    est_grid = &est_lp.grid;
    ref_grid = &ref_lp.grid;
  }

  GradientField grad_domain;
  if (banded) {
    BandPartition partition = build_partition(*cfg.partition);
    WeightVector weights = cfg.weighting == BandWeighting::kEqualLoudness
                               ? compute_weights(default_contour(), partition)
                               : uniform_weights(partition.bands.size());
    out.loss = loud_loss(*est_grid, *ref_grid, partition, weights).total;
    grad_domain = loud_loss_gradient(*est_grid, *ref_grid, partition, weights);
  } else {
    std::vector<double> bin_weights = per_bin_weights(
        default_contour(), est_grid->num_bins, 16000,
        static_cast<int>((est_grid->num_bins - 1) * 2));
    out.loss = per_bin_loss(*est_grid, *ref_grid, bin_weights);
    grad_domain = per_bin_loss_gradient(*est_grid, *ref_grid, bin_weights);
  }

  if (cfg.domain == LossDomain::kLogPower) {
    out.grad_magnitude =
        log_power_gradient_chain(est_mag, grad_domain, cfg.floor_db);
  } else {
    out.grad_magnitude = std::move(grad_domain);
  }
  return out;
}

std::vector<double> gains_gradient(const GradientField& grad_magnitude,
                                   const MagnitudeSpectrum& noisy) {
  const kernels::Backend& k = kernels::active();
  std::vector<double> grad(noisy.grid.num_bins, 0.0);
  for (size_t t = 0; t < noisy.grid.num_frames; ++t) {
    k.accumulate_product(grad.data(), grad_magnitude.grid.frame(t),
                         noisy.grid.frame(t), noisy.grid.num_bins);
  }
  return grad;
}

}  // namespace

SynthDataset synth_dataset(uint64_t seed, size_t num_frames) {
  if (num_frames == 0) {
    throw Error(ErrorCode::kInvalidConfig, "num_frames must be positive");
  }
  std::mt19937_64 rng(seed);
  SynthDataset data;
  data.clean.freq_bin_hz = kSynthBinHz;
  data.noisy.freq_bin_hz = kSynthBinHz;
  data.clean.grid = SpectrumGrid(kSynthBins, num_frames);
  data.noisy.grid = SpectrumGrid(kSynthBins, num_frames);

  for (size_t t = 0; t < num_frames; ++t) {
    double* clean = data.clean.grid.frame(t);
    double* noisy = data.noisy.grid.frame(t);
    for (size_t f = 0; f < kSynthBins; ++f) {
      // Spectral tilt: energy decays with frequency; harmonics of the comb
      // sit well above a small inter-harmonic floor.
      double tilt =
          std::pow(1.0 + static_cast<double>(f) / 10.0, -0.8);
      bool harmonic = f > 0 && f % kHarmonicStride == 0;
      double jitter = 0.75 + 0.5 * uniform01(rng);
      double clean_mag = tilt * (harmonic ? 1.0 : 0.02) * jitter;
      double noise_mag = 0.01 + 0.05 * uniform01(rng);
      clean[f] = clean_mag;
      noisy[f] = clean_mag + noise_mag;
    }
  }
  return data;
}

double objective_loss(const GainModel& model, const SynthDataset& data,
                      const TrainObjective& objective) {
  check_model(model, data);
  MagnitudeSpectrum est = apply_gains(model, data.noisy);
  return eval_objective(est, data, objective).loss;
}

std::vector<double> objective_gradient(const GainModel& model,
                                       const SynthDataset& data,
                                       const TrainObjective& objective) {
  check_model(model, data);
  MagnitudeSpectrum est = apply_gains(model, data.noisy);
  LossAndGrad eval = eval_objective(est, data, objective);
  return gains_gradient(eval.grad_magnitude, data.noisy);
}

TrainRun train(const GainModel& init, const SynthDataset& data,
               const TrainObjective& objective, size_t steps, double lr) {
  check_model(init, data);
  if (steps == 0 || !(lr > 0.0) || !std::isfinite(lr)) {
    throw Error(ErrorCode::kInvalidConfig, "need steps >= 1 and lr > 0");
  }

  TrainRun run;
  run.loss_curve.reserve(steps + 1);
  GainModel model = init;

  MagnitudeSpectrum est = apply_gains(model, data.noisy);
  LossAndGrad eval = eval_objective(est, data, objective);
  run.loss_curve.push_back(eval.loss);

  for (size_t step = 0; step < steps; ++step) {
    std::vector<double> grad = gains_gradient(eval.grad_magnitude, data.noisy);
    for (size_t f = 0; f < model.gains.size(); ++f) {
      model.gains[f] = std::max(0.0, model.gains[f] - lr * grad[f]);
    }
    est = apply_gains(model, data.noisy);
    eval = eval_objective(est, data, objective);
    if (!std::isfinite(eval.loss)) {
      throw Error(ErrorCode::kDivergenceDetected,
                  "loss became non-finite; lower the learning rate");
    }
    run.loss_curve.push_back(eval.loss);
  }

  // Residuals measured on the common yardstick regardless of objective.
  BandPartition partition = build_partition(PartitionConfig{});
  LogPowerSpectrum est_lp = to_log_power(est, objective.loss_config.floor_db);
  LogPowerSpectrum ref_lp =
      to_log_power(data.clean, objective.loss_config.floor_db);
  run.per_band_residuals.reserve(partition.bands.size());
  for (const BinRange& band : partition.bands) {
    run.per_band_residuals.push_back(
        subband_loss(est_lp.grid, ref_lp.grid, band));
  }
  run.final_gains = std::move(model);
  return run;
}

ObjectiveComparison compare_objectives(uint64_t seed, size_t num_frames,
                                       size_t steps, double lr) {
  SynthDataset data = synth_dataset(seed, num_frames);
  GainModel init;
  init.gains.assign(kSynthBins, 1.0);

  TrainObjective loud_objective;  // defaults: equal-loudness, log power
  TrainObjective mse_objective;
  mse_objective.kind = TrainObjective::Kind::kLogPowerMse;

  ObjectiveComparison cmp;
  cmp.seed = seed;
  cmp.num_frames = num_frames;
  cmp.steps = steps;
  cmp.lr = lr;
  cmp.loud = train(init, data, loud_objective, steps, lr);
  cmp.mse = train(init, data, mse_objective, steps, lr);

  BandPartition partition = build_partition(PartitionConfig{});
  WeightVector weights = compute_weights(default_contour(), partition);
  cmp.band_weights = weights.w;
  cmp.band_centers_hz = partition.centers_hz;
  cmp.max_weight_band = static_cast<size_t>(
      std::max_element(weights.w.begin(), weights.w.end()) -
      weights.w.begin());
  return cmp;
}

}  // namespace loudloss
