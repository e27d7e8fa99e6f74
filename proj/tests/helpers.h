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

#ifndef LOUDLOSS_TESTS_HELPERS_H_
#define LOUDLOSS_TESTS_HELPERS_H_

#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "loudloss/types.h"

namespace test_helpers {

inline loudloss::SpectrumGrid random_grid(std::mt19937_64& rng, size_t bins,
                                          size_t frames, double lo,
                                          double hi) {
  loudloss::SpectrumGrid grid(bins, frames);
  std::uniform_real_distribution<double> dist(lo, hi);
  for (double& v : grid.data) {
    v = dist(rng);
  }
  return grid;
}

// Self-seeded PRNG with a fully pinned update so the seed-42 pair is the
// same bits on every platform.
struct XorShift64 {
  uint64_t state;
  explicit XorShift64(uint64_t seed) : state(seed ? seed : 1) {}
  uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// The fixed synthetic pair used for golden-output checks: one second of a
// 440 Hz tone as reference, the same tone plus uniform noise as estimate.
inline void make_seed42_pair(loudloss::AudioClip* est,
                             loudloss::AudioClip* ref) {
  constexpr size_t kSamples = 16000;
  constexpr double kTwoPi = 6.283185307179586;
  ref->sample_rate = 16000;
  est->sample_rate = 16000;
  ref->samples.resize(kSamples);
  est->samples.resize(kSamples);
  XorShift64 rng(42);
  for (size_t i = 0; i < kSamples; ++i) {
    double s = 0.5 * std::sin(kTwoPi * 440.0 * static_cast<double>(i) / 16000.0);
    ref->samples[i] = s;
    est->samples[i] = s + 0.1 * (rng.uniform01() - 0.5);
  }
}

inline std::filesystem::path temp_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("loudloss_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Runs the CLI binary named by the LOUDLOSS_BIN environment variable
// (exported by ctest) with the given argument string.
inline CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("LOUDLOSS_BIN");
  if (bin == nullptr) {
    throw std::runtime_error(
        "LOUDLOSS_BIN is not set; run through ctest or export it");
  }
  static int counter = 0;
  auto out_path = temp_dir() / ("cli_out_" + std::to_string(counter) + ".txt");
  auto err_path = temp_dir() / ("cli_err_" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = std::string("\"") + bin + "\" " + args + " > \"" +
                    out_path.string() + "\" 2> \"" + err_path.string() + "\"";
  int rc = std::system(cmd.c_str());
  CliResult result;
#if defined(_WIN32)
  result.exit_code = rc;
#else
  result.exit_code = WEXITSTATUS(rc);
#endif
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  return result;
}

#define CHECK_ERROR_CODE(expr, expected_code)                      \
  do {                                                             \
    bool threw_expected_ = false;                                  \
    try {                                                          \
      (void)(expr);                                                \
    } catch (const loudloss::Error& caught_) {                     \
      threw_expected_ = true;                                      \
      CHECK(caught_.code() == (expected_code));                    \
    }                                                              \
    CHECK_MESSAGE(threw_expected_, #expr " did not raise Error");  \
  } while (0)

}  // namespace test_helpers

#endif  // LOUDLOSS_TESTS_HELPERS_H_
