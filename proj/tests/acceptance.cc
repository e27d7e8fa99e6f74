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
//
// Release gate for the loss engine. Each check prints one PASS/FAIL line;
// the process exits non-zero if any check fails. Checks compare the library
// against independently coded references (see oracles.h), closed-form
// values, and a frozen golden output.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "helpers.h"
#include "json.hpp"
#include "loudloss/audio_io.h"
#include "loudloss/error.h"
#include "loudloss/kernels.h"
#include "loudloss/loss.h"
#include "loudloss/melbands.h"
#include "loudloss/metrics.h"
#include "loudloss/report.h"
#include "loudloss/spectrum.h"
#include "loudloss/trainer.h"
#include "loudloss/weights.h"
#include "oracles.h"

namespace {

using loudloss::AudioClip;
using loudloss::BandOverlap;
using loudloss::BandPartition;
using loudloss::BandScale;
using loudloss::BandWeighting;
using loudloss::GainModel;
using loudloss::LossDomain;
using loudloss::MagnitudeSpectrum;
using loudloss::PartitionConfig;
using loudloss::SpectrumGrid;
using loudloss::TrainObjective;
using loudloss::WeightVector;

int failures = 0;
std::vector<std::string> details;

void detail(const std::string& line) {
  if (details.size() < 12) details.push_back(line);
}

void report(const char* name, bool ok) {
  std::printf("%s %s\n", ok ? "PASS" : "FAIL", name);
  if (!ok) {
    ++failures;
    for (const auto& line : details) std::printf("       %s\n", line.c_str());
  }
  details.clear();
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// -------------------------------------------------------------------------
// 1. Frequency-scale conversion: closed form and round trip, fast.

bool check_scale_conversion() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(0.0, 8000.0);
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    double hz = dist(rng);
    double mel = loudloss::hz_to_mel(hz);
    double formula = 2595.0 * std::log10(1.0 + hz / 700.0);
    if (!close_rel(mel, formula, 1e-9)) {
      detail("hz_to_mel(" + std::to_string(hz) + ") = " + std::to_string(mel) +
             " but the formula gives " + std::to_string(formula));
      ok = false;
    }
    double back = loudloss::mel_to_hz(mel);
    if (!close_rel(back, hz, 1e-9)) {
      detail("round trip of " + std::to_string(hz) + " Hz came back as " +
             std::to_string(back));
      ok = false;
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 1.0) {
    detail("conversion sweep took " + std::to_string(elapsed) +
           " s, budget is 1 s");
    ok = false;
  }
  return ok;
}

// -------------------------------------------------------------------------
// 2. The loudness table is reproduced exactly, anchor included.

bool check_contour_table() {
  const auto& contour = loudloss::default_contour();
  const auto& expected = oracles::contour_table();
  bool ok = contour.entries.size() == expected.size();
  if (!ok) {
    detail("table has " + std::to_string(contour.entries.size()) +
           " rows, expected " + std::to_string(expected.size()));
  }
  for (size_t i = 0; ok && i < expected.size(); ++i) {
    if (contour.entries[i].frequency_hz != expected[i].hz ||
        contour.entries[i].spl_db != expected[i].spl) {
      detail("row " + std::to_string(i) + " is (" +
             std::to_string(contour.entries[i].frequency_hz) + ", " +
             std::to_string(contour.entries[i].spl_db) + ")");
      ok = false;
    }
  }
  if (loudloss::spl_lookup(contour, 1000.0) != 40.01) {
    detail("1 kHz lookup did not return 40.01 dB");
    ok = false;
  }
  if (loudloss::kReferenceSpl != 40.01) {
    detail("reference level is not 40.01 dB");
    ok = false;
  }
  return ok;
}

// -------------------------------------------------------------------------
// 3. Band weights equal the reference level over the looked-up SPL.

bool check_band_weights() {
  BandPartition p = loudloss::build_partition(PartitionConfig{});
  WeightVector w = loudloss::compute_weights(loudloss::default_contour(), p);
  bool ok = w.w.size() == 25;
  bool has_exact_one = false;
  for (size_t i = 0; ok && i < w.w.size(); ++i) {
    double expected = 40.01 / oracles::nearest_spl(p.centers_hz[i]);
    if (std::abs(w.w[i] - expected) > 1e-12) {
      detail("band " + std::to_string(i) + " weight " +
             std::to_string(w.w[i]) + " vs recomputed " +
             std::to_string(expected));
      ok = false;
    }
    if (w.w[i] == 1.0) has_exact_one = true;
  }
  if (!has_exact_one) {
    detail("no band weight equals 1.0 exactly");
    ok = false;
  }
  return ok;
}

// -------------------------------------------------------------------------
// 4. Default partition: equispaced boundaries, full coverage, two-band
//    membership for interior bins, agreement with exhaustive search.

bool check_partition_structure() {
  BandPartition p = loudloss::build_partition(PartitionConfig{});
  bool ok = true;
  if (p.boundaries_hz.size() != 27 || p.bands.size() != 25) {
    detail("unexpected boundary or band count");
    return false;
  }

  // Equispaced on the mel scale.
  double lo = loudloss::hz_to_mel(p.boundaries_hz.front());
  double hi = loudloss::hz_to_mel(p.boundaries_hz.back());
  double step = (hi - lo) / 26.0;
  for (size_t i = 0; i + 1 < 27; ++i) {
    double spacing = loudloss::hz_to_mel(p.boundaries_hz[i + 1]) -
                     loudloss::hz_to_mel(p.boundaries_hz[i]);
    if (std::abs(spacing - step) > 1e-9 * step) {
      detail("mel spacing between boundaries " + std::to_string(i) + " and " +
             std::to_string(i + 1) + " is " + std::to_string(spacing) +
             ", expected " + std::to_string(step));
      ok = false;
    }
  }

  // Membership: brute force against the library for every bin.
  std::vector<oracles::OracleBand> bands(p.bands.size());
  for (size_t i = 0; i < p.bands.size(); ++i) {
    bands[i] = {p.bands[i].begin, p.bands[i].end, 0.0};
  }
  for (size_t bin = 0; bin < p.num_bins(); ++bin) {
    auto expected = oracles::bands_containing(bands, bin);
    auto got = loudloss::bin_membership(p, bin);
    if (got != expected) {
      detail("membership of bin " + std::to_string(bin) + " disagrees");
      ok = false;
    }
    if (expected.empty()) {
      detail("bin " + std::to_string(bin) + " is uncovered");
      ok = false;
    }
  }

  // Interior bins sit in exactly two half-overlapping bands.
  for (size_t bin = p.boundary_bins[1]; bin < p.boundary_bins[25]; ++bin) {
    if (oracles::bands_containing(bands, bin).size() != 2) {
      detail("interior bin " + std::to_string(bin) +
             " is not in exactly two bands");
      ok = false;
    }
  }
  return ok;
}

// -------------------------------------------------------------------------
// 5. The weighted sub-band loss matches a naive triple-loop reference.

bool check_loss_against_oracle() {
  BandPartition p = loudloss::build_partition(PartitionConfig{});
  WeightVector w = loudloss::compute_weights(loudloss::default_contour(), p);
  std::vector<oracles::OracleBand> bands(p.bands.size());
  for (size_t i = 0; i < p.bands.size(); ++i) {
    bands[i] = {p.bands[i].begin, p.bands[i].end, 0.0};
  }

  std::mt19937_64 rng(2);
  bool ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    SpectrumGrid ref = test_helpers::random_grid(rng, 257, 10, -80.0, 20.0);
    SpectrumGrid est = test_helpers::random_grid(rng, 257, 10, -80.0, 20.0);
    double got = loudloss::loud_loss(est, ref, p, w).total;
    double expected = oracles::weighted_subband_loss(est, ref, bands, w.w);
    if (!close_rel(got, expected, 1e-10)) {
      detail("trial " + std::to_string(trial) + ": " + std::to_string(got) +
             " vs reference " + std::to_string(expected));
      ok = false;
    }
  }

  // Zero exactly when inputs agree, positive as soon as any cell differs.
  SpectrumGrid same = test_helpers::random_grid(rng, 257, 4, -40.0, 0.0);
  if (loudloss::loud_loss(same, same, p, w).total != 0.0) {
    detail("identical spectra scored non-zero");
    ok = false;
  }
  SpectrumGrid bumped = same;
  bumped.at(200, 3) += 1e-9;
  if (!(loudloss::loud_loss(bumped, same, p, w).total > 0.0)) {
    detail("a perturbed cell scored zero");
    ok = false;
  }
  return ok;
}

// -------------------------------------------------------------------------
// 6. Analytic gradients agree with central finite differences, both at the
//    spectrum level and chained through gains and the log-power map.

bool check_gradients() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(3);
  bool ok = true;

  // Spectrum-level gradients for the banded and per-bin weightings.
  BandPartition p = loudloss::build_partition(PartitionConfig{});
  WeightVector el = loudloss::compute_weights(loudloss::default_contour(), p);
  WeightVector un = loudloss::uniform_weights(25);
  auto bin_w =
      loudloss::per_bin_weights(loudloss::default_contour(), 257, 16000, 512);

  for (int trial = 0; trial < 20 && ok; ++trial) {
    SpectrumGrid ref = test_helpers::random_grid(rng, 257, 3, -60.0, 0.0);
    SpectrumGrid est = test_helpers::random_grid(rng, 257, 3, -60.0, 0.0);
    for (int mode = 0; mode < 3; ++mode) {
      auto eval = [&](const SpectrumGrid& g) {
        if (mode == 0) return loudloss::loud_loss(g, ref, p, el).total;
        if (mode == 1) return loudloss::loud_loss(g, ref, p, un).total;
        return loudloss::per_bin_loss(g, ref, bin_w);
      };
      loudloss::GradientField grad =
          mode == 0   ? loudloss::loud_loss_gradient(est, ref, p, el)
          : mode == 1 ? loudloss::loud_loss_gradient(est, ref, p, un)
                      : loudloss::per_bin_loss_gradient(est, ref, bin_w);
      SpectrumGrid probe = est;
      for (size_t i = trial % 7; i < probe.data.size(); i += 29) {
        double fd = oracles::central_difference(
            [&] { return eval(probe); }, &probe.data[i], 1e-3);
        if (std::abs(grad.grid.data[i] - fd) >
            1e-4 * std::max(1e-6, std::max(std::abs(fd),
                                           std::abs(grad.grid.data[i])))) {
          detail("spectrum gradient mode " + std::to_string(mode) +
                 " entry " + std::to_string(i) + ": analytic " +
                 std::to_string(grad.grid.data[i]) + " vs fd " +
                 std::to_string(fd));
          ok = false;
        }
      }
    }
  }

  // Chained gradients: gains -> magnitudes -> (log power) -> loss, for every
  // weighting/domain combination.
  struct ChainConfig {
    BandWeighting weighting;
    LossDomain domain;
  };
  const ChainConfig configs[] = {
      {BandWeighting::kEqualLoudness, LossDomain::kLogPower},
      {BandWeighting::kEqualLoudness, LossDomain::kLinearMagnitude},
      {BandWeighting::kUniform, LossDomain::kLogPower},
      {BandWeighting::kUniform, LossDomain::kLinearMagnitude},
      {BandWeighting::kPerBin, LossDomain::kLogPower},
      {BandWeighting::kPerBin, LossDomain::kLinearMagnitude},
  };
  test_helpers::XorShift64 gain_rng(4);
  for (const auto& cc : configs) {
    for (int trial = 0; trial < 20 && ok; ++trial) {
      loudloss::SynthDataset data =
          loudloss::synth_dataset(100 + static_cast<uint64_t>(trial), 3);
      TrainObjective objective;
      objective.loss_config.weighting = cc.weighting;
      objective.loss_config.domain = cc.domain;
      if (cc.weighting == BandWeighting::kPerBin) {
        objective.loss_config.partition = std::nullopt;
      }
      GainModel model;
      model.gains.resize(257);
      for (auto& g : model.gains) g = 0.5 + gain_rng.uniform01();

      auto grad = loudloss::objective_gradient(model, data, objective);
      GainModel probe = model;
      auto eval = [&] {
        return loudloss::objective_loss(probe, data, objective);
      };
      for (size_t f = trial % 5; f < 257; f += 23) {
        double fd =
            oracles::central_difference(eval, &probe.gains[f], 1e-5);
        if (std::abs(grad[f] - fd) >
            1e-4 * std::max(1e-6, std::max(std::abs(fd), std::abs(grad[f])))) {
          detail("chained gradient (weighting " +
                 std::to_string(static_cast<int>(cc.weighting)) + ", domain " +
                 std::to_string(static_cast<int>(cc.domain)) + ") gain " +
                 std::to_string(f) + ": analytic " + std::to_string(grad[f]) +
                 " vs fd " + std::to_string(fd));
          ok = false;
        }
      }
    }
  }

  double elapsed = seconds_since(start);
  if (elapsed >= 30.0) {
    detail("gradient checks took " + std::to_string(elapsed) +
           " s, budget is 30 s");
    ok = false;
  }
  return ok;
}

// -------------------------------------------------------------------------
// 7. Ablation identities: uniform weights over equal-size non-overlapping
//    bands reduce to a scaled global MSE; the compressed baseline collapses
//    to plain MSE at alpha = 1 and hits its closed form.

bool check_ablation_identities() {
  bool ok = true;

  // 16 equal bands of 15 bins each over [0, 7500) Hz: bins [0, 240).
  PartitionConfig cfg;
  cfg.num_bands = 16;
  cfg.f_max_hz = 7500.0;
  cfg.scale = BandScale::kUniformHz;
  cfg.overlap = BandOverlap::kNone;
  BandPartition p = loudloss::build_partition(cfg);
  for (size_t i = 0; i < p.bands.size(); ++i) {
    if (p.bands[i].width() != 15) {
      detail("band " + std::to_string(i) + " has width " +
             std::to_string(p.bands[i].width()) + ", expected 15");
      ok = false;
    }
  }

  std::mt19937_64 rng(7);
  SpectrumGrid ref = test_helpers::random_grid(rng, 257, 9, -60.0, 0.0);
  SpectrumGrid est = test_helpers::random_grid(rng, 257, 9, -60.0, 0.0);
  WeightVector uniform = loudloss::uniform_weights(16);
  double total = loudloss::loud_loss(est, ref, p, uniform).total;

  SpectrumGrid ref_cut(240, 9);
  SpectrumGrid est_cut(240, 9);
  for (size_t t = 0; t < 9; ++t) {
    for (size_t f = 0; f < 240; ++f) {
      ref_cut.at(f, t) = ref.at(f, t);
      est_cut.at(f, t) = est.at(f, t);
    }
  }
  double global = loudloss::mse_loss(est_cut, ref_cut);
  if (!close_rel(total, 16.0 * global, 1e-10)) {
    detail("uniform equal-size total " + std::to_string(total) +
           " vs 16 x global MSE " + std::to_string(16.0 * global));
    ok = false;
  }

  // Compressed baseline.
  MagnitudeSpectrum me, mr;
  me.grid = test_helpers::random_grid(rng, 129, 5, 0.0, 2.0);
  mr.grid = test_helpers::random_grid(rng, 129, 5, 0.0, 2.0);
  if (loudloss::compressed_loss(me, mr, 1.0) !=
      loudloss::mse_loss(me.grid, mr.grid)) {
    detail("alpha = 1 does not reduce to plain MSE bit for bit");
    ok = false;
  }

  MagnitudeSpectrum fours, ones;
  fours.grid = SpectrumGrid(33, 4);
  ones.grid = SpectrumGrid(33, 4);
  for (auto& v : fours.grid.data) v = 4.0;
  for (auto& v : ones.grid.data) v = 1.0;
  double d = std::pow(4.0, 0.3) - 1.0;
  if (!close_rel(loudloss::compressed_loss(fours, ones, 0.3), d * d, 1e-12)) {
    detail("alpha = 0.3 closed form violated");
    ok = false;
  }
  return ok;
}

// -------------------------------------------------------------------------
// 8. Metric properties: exact scale invariance on representable scalings, a
//    constructed SNR level, and the perfect sentinel.

bool check_metric_properties() {
  bool ok = true;

  // Clips on the PCM16 grid so the scalings below are exact in binary.
  AudioClip ref, est;
  test_helpers::XorShift64 rng(8);
  ref.samples.resize(8192);
  est.samples.resize(8192);
  for (size_t i = 0; i < ref.samples.size(); ++i) {
    int rk = static_cast<int>(rng.next() % 4001) - 2000;
    int ek = rk + static_cast<int>(rng.next() % 201) - 100;
    ref.samples[i] = static_cast<double>(rk) / 32768.0;
    est.samples[i] = static_cast<double>(ek) / 32768.0;
  }

  loudloss::SnrResult base = loudloss::si_snr(est, ref);
  for (double c : {-3.0, 0.5, 10.0}) {
    AudioClip scaled = est;
    for (auto& s : scaled.samples) s *= c;
    loudloss::SnrResult r = loudloss::si_snr(scaled, ref);
    if (r.db != base.db || r.perfect != base.perfect) {
      detail("si_snr changed under scaling by " + std::to_string(c) + ": " +
             std::to_string(base.db) + " -> " + std::to_string(r.db));
      ok = false;
    }
  }

  // A rescaled copy of the reference is a perfect reconstruction.
  AudioClip copy = ref;
  for (auto& s : copy.samples) s *= -2.5;
  if (!loudloss::si_snr(copy, ref).perfect) {
    detail("a scaled copy of the reference was not flagged perfect");
    ok = false;
  }

  // Constructed plain-SNR level: noise energy forced to 1% of the signal.
  AudioClip tone;
  tone.samples.resize(16000);
  for (size_t i = 0; i < tone.samples.size(); ++i) {
    tone.samples[i] =
        0.5 * std::sin(6.283185307179586 * 440.0 * static_cast<double>(i) /
                       16000.0);
  }
  const auto& k = loudloss::kernels::scalar_backend();
  double ref_energy = k.reduce_sq(tone.samples.data(), tone.samples.size());
  std::vector<double> noise(tone.samples.size());
  for (auto& x : noise) x = 2.0 * rng.uniform01() - 1.0;
  double noise_energy = k.reduce_sq(noise.data(), noise.size());
  double gain = std::sqrt(ref_energy / (100.0 * noise_energy));
  AudioClip noisy = tone;
  for (size_t i = 0; i < noisy.samples.size(); ++i) {
    noisy.samples[i] += gain * noise[i];
  }
  double snr_db = loudloss::snr(noisy, tone).db;
  if (std::abs(snr_db - 20.0) > 0.01) {
    detail("constructed 20 dB case measured " + std::to_string(snr_db));
    ok = false;
  }
  return ok;
}

// -------------------------------------------------------------------------
// 9. Training comparison: on the common log-power yardstick, the weighted
//    objective should protect its highest-weight band better than plain MSE
//    in most runs, and both descents must be stable.

bool check_training_comparison() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  int loud_wins = 0;
  const int seeds = 10;

  for (uint64_t seed = 1; seed <= seeds; ++seed) {
    loudloss::ObjectiveComparison cmp = loudloss::compare_objectives(seed);
    size_t m = cmp.max_weight_band;
    if (cmp.loud.per_band_residuals[m] < cmp.mse.per_band_residuals[m]) {
      ++loud_wins;
    }

    for (const auto* run : {&cmp.loud, &cmp.mse}) {
      const auto& curve = run->loss_curve;
      for (size_t i = 5; i + 1 < curve.size(); ++i) {
        if (curve[i + 1] > curve[i] * (1.0 + 1e-9)) {
          detail("seed " + std::to_string(seed) + ": loss rose from " +
                 std::to_string(curve[i]) + " to " +
                 std::to_string(curve[i + 1]) + " at step " +
                 std::to_string(i));
          ok = false;
        }
      }
    }
  }
  if (loud_wins < 8) {
    detail("weighted objective won the top-weight band in only " +
           std::to_string(loud_wins) + "/10 runs");
    ok = false;
  }

  double elapsed = seconds_since(start);
  if (elapsed >= 60.0) {
    detail("training comparison took " + std::to_string(elapsed) +
           " s, budget is 60 s");
    ok = false;
  }
  return ok;
}

// -------------------------------------------------------------------------
// 10. End to end through the CLI: deterministic bytes, a from-scratch
//     reference computation, and a frozen golden file.

bool compare_json_numbers(const nlohmann::json& a, const nlohmann::json& b,
                          const std::string& path, double tol) {
  if (a.is_number() && b.is_number()) {
    double x = a.get<double>();
    double y = b.get<double>();
    if (!close_rel(x, y, tol)) {
      detail(path + ": " + std::to_string(x) + " vs golden " +
             std::to_string(y));
      return false;
    }
    return true;
  }
  if (a.is_object() && b.is_object()) {
    if (a.size() != b.size()) {
      detail(path + ": key sets differ");
      return false;
    }
    bool ok = true;
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (!b.contains(it.key())) {
        detail(path + ": missing key " + it.key());
        return false;
      }
      ok = compare_json_numbers(it.value(), b.at(it.key()),
                                path + "." + it.key(), tol) &&
           ok;
    }
    return ok;
  }
  if (a.is_array() && b.is_array()) {
    if (a.size() != b.size()) {
      detail(path + ": array lengths differ");
      return false;
    }
    bool ok = true;
    for (size_t i = 0; i < a.size(); ++i) {
      ok = compare_json_numbers(a[i], b[i], path + "[" + std::to_string(i) + "]",
                                tol) &&
           ok;
    }
    return ok;
  }
  if (a != b) {
    detail(path + ": " + a.dump() + " vs golden " + b.dump());
    return false;
  }
  return true;
}

bool check_end_to_end() {
  bool ok = true;

  AudioClip est, ref;
  test_helpers::make_seed42_pair(&est, &ref);
  auto est_path = (test_helpers::temp_dir() / "acc_est.wav").string();
  auto ref_path = (test_helpers::temp_dir() / "acc_ref.wav").string();
  loudloss::save_wav(est_path, est);
  loudloss::save_wav(ref_path, ref);

  auto args = "analyze \"" + est_path + "\" \"" + ref_path + "\"";
  auto first = test_helpers::run_cli(args);
  auto second = test_helpers::run_cli(args);
  if (first.exit_code != 0 || second.exit_code != 0) {
    detail("analyze exited with " + std::to_string(first.exit_code) + " / " +
           std::to_string(second.exit_code));
    return false;
  }
  if (first.out != second.out) {
    detail("two identical runs produced different bytes");
    ok = false;
  }

  // From-scratch reference computation on the decoded samples (the WAV round
  // trip quantizes, so the oracle must see what the CLI saw).
  AudioClip est_q = loudloss::load_wav(est_path);
  AudioClip ref_q = loudloss::load_wav(ref_path);
  double expected = oracles::end_to_end_loss(est_q.samples, ref_q.samples);
  nlohmann::json parsed = nlohmann::json::parse(first.out);
  double total = parsed["loss"]["total"].get<double>();
  if (!close_rel(total, expected, 1e-9)) {
    detail("CLI total " + std::to_string(total) +
           " vs from-scratch reference " + std::to_string(expected));
    ok = false;
  }

  // Frozen golden output.
  std::string golden_path =
      std::string(LOUDLOSS_TEST_DATA_DIR) + "/analyze_seed42.json";
  std::string golden_text = test_helpers::read_file(golden_path);
  if (golden_text.empty()) {
    detail("missing golden file " + golden_path +
           "; regenerate it from a verified analyze run");
    ok = false;
  } else {
    nlohmann::json golden = nlohmann::json::parse(golden_text);
    if (!compare_json_numbers(parsed, golden, "$", 1e-9)) {
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main() {
  std::printf("loudloss acceptance checks\n");

  report("01 scale conversion closed form and round trip",
         check_scale_conversion());
  report("02 loudness table reproduced exactly", check_contour_table());
  report("03 band weights follow the table lookup", check_band_weights());
  report("04 partition boundaries, coverage and membership",
         check_partition_structure());
  report("05 weighted sub-band loss matches naive reference",
         check_loss_against_oracle());
  report("06 analytic gradients match finite differences", check_gradients());
  report("07 ablation identities (uniform bands, compression)",
         check_ablation_identities());
  report("08 metric invariances and constructed levels",
         check_metric_properties());
  report("09 objective comparison protects the top-weight band",
         check_training_comparison());
  report("10 CLI end to end: determinism, reference, golden",
         check_end_to_end());

  if (failures > 0) {
    std::printf("%d check(s) failed\n", failures);
    return 1;
  }
  std::printf("all checks passed\n");
  return 0;
}
