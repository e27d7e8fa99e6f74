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

// loudloss command line: analyze a clip pair, dump band partitions and
// weights, or run the gradient-descent training demo. Exit codes: 0 on
// success, 2 on input/config errors, 1 on internal failures; every error
// prints exactly one diagnostic line on stderr.

#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loudloss/audio_io.h"
#include "loudloss/error.h"
#include "loudloss/loss.h"
#include "loudloss/melbands.h"
#include "loudloss/metrics.h"
#include "loudloss/report.h"
#include "loudloss/spectrum.h"
#include "loudloss/trainer.h"
#include "loudloss/weights.h"

namespace {

using loudloss::BandOverlap;
using loudloss::BandScale;
using loudloss::BandWeighting;
using loudloss::LossDomain;

struct PartitionFlags {
  int bands = 25;
  std::string scale = "mel";
  std::string overlap = "half";
};

void add_partition_flags(CLI::App* cmd, PartitionFlags* flags) {
  cmd->add_option("-k,--bands", flags->bands, "Number of sub-bands")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--scale", flags->scale, "Band spacing: mel or uniform-hz")
      ->check(CLI::IsMember({"mel", "uniform-hz"}));
  cmd->add_option("--overlap", flags->overlap, "Band overlap: half or none")
      ->check(CLI::IsMember({"half", "none"}));
}

loudloss::PartitionConfig to_partition_config(const PartitionFlags& flags) {
  loudloss::PartitionConfig config;
  config.num_bands = flags.bands;
  config.scale = flags.scale == "mel" ? BandScale::kMel : BandScale::kUniformHz;
  config.overlap =
      flags.overlap == "half" ? BandOverlap::kHalf : BandOverlap::kNone;
  return config;
}

int run_analyze(const std::string& est_path, const std::string& ref_path,
                const PartitionFlags& partition_flags,
                const std::string& weighting, const std::string& domain,
                double floor_db, const std::vector<double>& alphas) {
  loudloss::AudioClip est = loudloss::load_wav(est_path);
  loudloss::AudioClip ref = loudloss::load_wav(ref_path);

  loudloss::StftConfig stft;
  loudloss::LossConfig config;
  config.domain = domain == "log-power" ? LossDomain::kLogPower
                                        : LossDomain::kLinearMagnitude;
  config.floor_db = floor_db;
  if (weighting == "per-bin") {
    config.weighting = BandWeighting::kPerBin;
    config.partition.reset();
  } else {
    config.weighting = weighting == "uniform" ? BandWeighting::kUniform
                                              : BandWeighting::kEqualLoudness;
    config.partition = to_partition_config(partition_flags);
  }

  loudloss::AnalyzeReport report;
  report.loss = loudloss::evaluate(est, ref, stft, config);

  loudloss::MagnitudeSpectrum est_mag = loudloss::stft_magnitude(est, stft);
  loudloss::MagnitudeSpectrum ref_mag = loudloss::stft_magnitude(ref, stft);
  report.mse_magnitude = loudloss::mse_loss(est_mag.grid, ref_mag.grid);
  for (double alpha : alphas) {
    report.compressed.emplace_back(
        alpha, loudloss::compressed_loss(est_mag, ref_mag, alpha));
  }
  report.metrics = loudloss::compute_metrics(est, ref);

  std::cout << loudloss::analyze_report_json(report) << "\n";
  return 0;
}

int run_partition(const PartitionFlags& flags) {
  loudloss::BandPartition partition =
      loudloss::build_partition(to_partition_config(flags));
  std::cout << loudloss::partition_csv(partition);
  return 0;
}

int run_weights(const PartitionFlags& flags, const std::string& weighting) {
  loudloss::BandPartition partition =
      loudloss::build_partition(to_partition_config(flags));
  loudloss::WeightVector weights =
      weighting == "uniform"
          ? loudloss::uniform_weights(partition.bands.size())
          : loudloss::compute_weights(loudloss::default_contour(), partition);
  std::cout << loudloss::weights_csv(partition, weights,
                                     loudloss::default_contour());
  return 0;
}

int run_train_demo(uint64_t seed, size_t frames, size_t steps, double lr,
                   const std::string& format) {
  loudloss::ObjectiveComparison comparison =
      loudloss::compare_objectives(seed, frames, steps, lr);
  if (format == "csv") {
    std::cout << loudloss::comparison_csv(comparison);
  } else {
    std::cout << loudloss::comparison_json(comparison) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perceptually weighted sub-band spectral loss toolkit"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "Compare an estimate WAV against a reference WAV");
  std::string est_path;
  std::string ref_path;
  PartitionFlags analyze_partition;
  std::string analyze_weighting = "equal-loudness";
  std::string analyze_domain = "log-power";
  double floor_db = loudloss::kDefaultFloorDb;
  std::vector<double> alphas;
  analyze->add_option("estimate", est_path, "Estimated/degraded WAV")
      ->required();
  analyze->add_option("reference", ref_path, "Reference WAV")->required();
  add_partition_flags(analyze, &analyze_partition);
  analyze
      ->add_option("--weighting", analyze_weighting,
                   "equal-loudness, uniform or per-bin")
      ->check(CLI::IsMember({"equal-loudness", "uniform", "per-bin"}));
  analyze
      ->add_option("--domain", analyze_domain, "log-power or magnitude")
      ->check(CLI::IsMember({"log-power", "magnitude"}));
  analyze->add_option("--floor-db", floor_db, "Log-power clamp in dB");
  analyze->add_option("--alpha", alphas,
                      "Compression exponent(s) for the compressed baseline");

  // partition
  auto* partition = app.add_subcommand(
      "partition", "Print the sub-band partition as CSV");
  PartitionFlags partition_flags;
  add_partition_flags(partition, &partition_flags);

  // weights
  auto* weights = app.add_subcommand(
      "weights", "Print per-band loudness weights as CSV");
  PartitionFlags weights_flags;
  std::string weights_weighting = "equal-loudness";
  add_partition_flags(weights, &weights_flags);
  weights
      ->add_option("--weighting", weights_weighting,
                   "equal-loudness or uniform")
      ->check(CLI::IsMember({"equal-loudness", "uniform"}));

  // train-demo
  auto* train = app.add_subcommand(
      "train-demo", "Gradient-descent gain demo on a synthetic pair");
  uint64_t seed = 42;
  size_t frames = loudloss::kDefaultTrainFrames;
  size_t steps = loudloss::kDefaultTrainSteps;
  double lr = loudloss::kDefaultTrainLr;
  std::string format = "json";
  train->add_option("--seed", seed, "Dataset seed");
  train->add_option("--frames", frames, "Synthetic frames")
      ->check(CLI::PositiveNumber);
  train->add_option("--steps", steps, "Gradient steps")
      ->check(CLI::PositiveNumber);
  train->add_option("--lr", lr, "Learning rate")->check(CLI::PositiveNumber);
  train->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) {
      return run_analyze(est_path, ref_path, analyze_partition,
                         analyze_weighting, analyze_domain, floor_db,
                         alphas.empty() ? std::vector<double>{0.3} : alphas);
    }
    if (app.got_subcommand(partition)) {
      return run_partition(partition_flags);
    }
    if (app.got_subcommand(weights)) {
      return run_weights(weights_flags, weights_weighting);
    }
    return run_train_demo(seed, frames, steps, lr, format);
  } catch (const loudloss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
