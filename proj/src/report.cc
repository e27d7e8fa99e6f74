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

#include "loudloss/report.h"

#include <cstdio>
#include <string>

namespace loudloss {
namespace {

const char* domain_name(LossDomain domain) {
  return domain == LossDomain::kLogPower ? "log_power" : "linear_magnitude";
}

const char* weighting_name(BandWeighting weighting) {
  switch (weighting) {
    case BandWeighting::kEqualLoudness:
      return "equal_loudness";
    case BandWeighting::kUniform:
      return "uniform";
    case BandWeighting::kPerBin:
      return "per_bin";
  }
  return "?";
}

const char* scale_name(BandScale scale) {
  return scale == BandScale::kMel ? "mel" : "uniform_hz";
}

const char* overlap_name(BandOverlap overlap) {
  return overlap == BandOverlap::kHalf ? "half" : "none";
}

void append_snr(std::string& out, const char* key, const SnrResult& value) {
  out += '"';
  out += key;
  out += "\":";
  if (value.perfect) {
    out += "\"perfect\"";
  } else {
    out += format_json_double(value.db);
  }
}

void append_double_array(std::string& out, const std::vector<double>& values) {
  out += '[';
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_json_double(values[i]);
  }
  out += ']';
}

void append_config(std::string& out, const LossReport& report) {
  out += "\"config\":{\"domain\":\"";
  out += domain_name(report.config.domain);
  out += "\",\"weighting\":\"";
  out += weighting_name(report.config.weighting);
  out += "\",\"floor_db\":";
  out += format_json_double(report.config.floor_db);
  out += ",\"window_length\":" + std::to_string(report.stft.window_length);
  out += ",\"hop_length\":" + std::to_string(report.stft.hop_length);
  out += ",\"sample_rate\":" + std::to_string(report.sample_rate);
  out += ",\"partition\":";
  if (report.config.partition.has_value()) {
    const PartitionConfig& p = *report.config.partition;
    out += "{\"num_bands\":" + std::to_string(p.num_bands);
    out += ",\"scale\":\"";
    out += scale_name(p.scale);
    out += "\",\"overlap\":\"";
    out += overlap_name(p.overlap);
    out += "\",\"f_min_hz\":" + format_json_double(p.f_min_hz);
    out += ",\"f_max_hz\":" + format_json_double(p.f_max_hz);
    out += ",\"fft_size\":" + std::to_string(p.fft_size);
    out += '}';
  } else {
    out += "null";
  }
  out += '}';
}

void append_train_run(std::string& out, const TrainRun& run) {
  out += "{\"loss_curve\":";
  append_double_array(out, run.loss_curve);
  out += ",\"final_gains\":";
  append_double_array(out, run.final_gains.gains);
  out += ",\"per_band_residuals\":";
  append_double_array(out, run.per_band_residuals);
  out += '}';
}

}  // namespace

std::string format_json_double(double value) {
  if (value == 0.0) {
    value = 0.0;  // never print -0
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

std::string format_csv_double(double value) {
  if (value == 0.0) {
    value = 0.0;
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string loss_report_json(const LossReport& report) {
  std::string out = "{\"total\":";
  out += format_json_double(report.total);
  out += ",\"bands\":[";
  for (size_t i = 0; i < report.per_band.size(); ++i) {
    const BandLoss& band = report.per_band[i];
    if (i) out += ',';
    out += "{\"i\":" + std::to_string(band.band);
    out += ",\"loss\":" + format_json_double(band.loss);
    out += ",\"weight\":" + format_json_double(band.weight);
    out += ",\"center_hz\":" + format_json_double(band.center_hz);
    out += '}';
  }
  out += "],";
  append_config(out, report);
  out += '}';
  return out;
}

std::string analyze_report_json(const AnalyzeReport& report) {
  std::string out = "{\"loss\":";
  out += loss_report_json(report.loss);
  out += ",\"mse_magnitude\":";
  out += format_json_double(report.mse_magnitude);
  out += ",\"compressed\":[";
  for (size_t i = 0; i < report.compressed.size(); ++i) {
    if (i) out += ',';
    out += "{\"alpha\":" + format_json_double(report.compressed[i].first);
    out += ",\"loss\":" + format_json_double(report.compressed[i].second);
    out += '}';
  }
  out += "],\"metrics\":{";
  append_snr(out, "snr_db", report.metrics.snr);
  out += ',';
  append_snr(out, "si_snr_db", report.metrics.si_snr);
  out += "}}";
  return out;
}

std::string partition_csv(const BandPartition& partition) {
  std::string out = "band,start_bin,end_bin,width,center_hz,lower_hz,upper_hz\n";
  bool half = partition.config.overlap == BandOverlap::kHalf;
  for (size_t i = 0; i < partition.bands.size(); ++i) {
    const BinRange& band = partition.bands[i];
    double lower = partition.boundaries_hz[i];
    double upper = partition.boundaries_hz[half ? i + 2 : i + 1];
    out += std::to_string(i);
    out += ',' + std::to_string(band.begin);
    out += ',' + std::to_string(band.end);
    out += ',' + std::to_string(band.width());
    out += ',' + format_csv_double(partition.centers_hz[i]);
    out += ',' + format_csv_double(lower);
    out += ',' + format_csv_double(upper);
    out += '\n';
  }
  return out;
}

std::string weights_csv(const BandPartition& partition,
                        const WeightVector& weights,
                        const LoudnessContour& contour) {
  std::string out = "band,center_hz,table_hz,spl_db,weight\n";
  for (size_t i = 0; i < partition.bands.size(); ++i) {
    const ContourPoint& entry =
        nearest_contour_entry(contour, partition.centers_hz[i]);
    out += std::to_string(i);
    out += ',' + format_csv_double(partition.centers_hz[i]);
    out += ',' + format_csv_double(entry.frequency_hz);
    out += ',' + format_csv_double(entry.spl_db);
    out += ',' + format_csv_double(weights.w[i]);
    out += '\n';
  }
  return out;
}

std::string comparison_json(const ObjectiveComparison& comparison) {
  std::string out = "{\"seed\":" + std::to_string(comparison.seed);
  out += ",\"num_frames\":" + std::to_string(comparison.num_frames);
  out += ",\"steps\":" + std::to_string(comparison.steps);
  out += ",\"lr\":" + format_json_double(comparison.lr);
  out += ",\"max_weight_band\":" + std::to_string(comparison.max_weight_band);
  size_t m = comparison.max_weight_band;
  out += ",\"max_band_residual_loud\":" +
         format_json_double(comparison.loud.per_band_residuals[m]);
  out += ",\"max_band_residual_mse\":" +
         format_json_double(comparison.mse.per_band_residuals[m]);
  out += ",\"loud\":";
  append_train_run(out, comparison.loud);
  out += ",\"mse\":";
  append_train_run(out, comparison.mse);
  out += ",\"bands\":[";
  for (size_t i = 0; i < comparison.band_weights.size(); ++i) {
    if (i) out += ',';
    out += "{\"i\":" + std::to_string(i);
    out += ",\"center_hz\":" + format_json_double(comparison.band_centers_hz[i]);
    out += ",\"weight\":" + format_json_double(comparison.band_weights[i]);
    out += ",\"residual_loud\":" +
           format_json_double(comparison.loud.per_band_residuals[i]);
    out += ",\"residual_mse\":" +
           format_json_double(comparison.mse.per_band_residuals[i]);
    out += '}';
  }
  out += "]}";
  return out;
}

std::string comparison_csv(const ObjectiveComparison& comparison) {
  std::string out = "band,center_hz,weight,residual_loud,residual_mse\n";
  for (size_t i = 0; i < comparison.band_weights.size(); ++i) {
    out += std::to_string(i);
    out += ',' + format_csv_double(comparison.band_centers_hz[i]);
    out += ',' + format_csv_double(comparison.band_weights[i]);
    out += ',' + format_csv_double(comparison.loud.per_band_residuals[i]);
    out += ',' + format_csv_double(comparison.mse.per_band_residuals[i]);
    out += '\n';
  }
  return out;
}

}  // namespace loudloss
