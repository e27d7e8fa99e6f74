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

#ifndef LOUDLOSS_REPORT_H_
#define LOUDLOSS_REPORT_H_

#include <string>
#include <utility>
#include <vector>

#include "loudloss/loss.h"
#include "loudloss/metrics.h"
#include "loudloss/trainer.h"
#include "loudloss/weights.h"

namespace loudloss {

// All writers emit keys in a fixed order and format floats with 9
// significant digits ("%.9g", C locale), so identical inputs produce
// byte-identical reports. CSV columns use fixed 6-decimal notation.

std::string format_json_double(double value);
std::string format_csv_double(double value);

std::string loss_report_json(const LossReport& report);

// Everything the analyze command reports for a clip pair.
struct AnalyzeReport {
  LossReport loss;
  double mse_magnitude = 0.0;  // plain MSE between magnitude spectra
  std::vector<std::pair<double, double>> compressed;  // (alpha, loss)
  MetricReport metrics;
};

std::string analyze_report_json(const AnalyzeReport& report);

std::string partition_csv(const BandPartition& partition);

std::string weights_csv(const BandPartition& partition,
                        const WeightVector& weights,
                        const LoudnessContour& contour);

std::string comparison_json(const ObjectiveComparison& comparison);
std::string comparison_csv(const ObjectiveComparison& comparison);

}  // namespace loudloss

#endif  // LOUDLOSS_REPORT_H_
