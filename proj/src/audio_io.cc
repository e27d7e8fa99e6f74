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

#include "loudloss/audio_io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "loudloss/error.h"

namespace loudloss {
namespace {

constexpr uint16_t kFormatPcm = 1;

uint32_t read_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
         static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

uint16_t read_u16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | p[1] << 8);
}

bool tag_is(const uint8_t* p, const char* tag) {
  return std::memcmp(p, tag, 4) == 0;
}

struct FmtChunk {
  uint16_t audio_format = 0;
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t bits_per_sample = 0;
};

}  // namespace

AudioClip load_wav(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::kIoFailure, "cannot open " + path);
  }
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(file)),
                             std::istreambuf_iterator<char>());
  if (file.bad()) {
    throw Error(ErrorCode::kIoFailure, "read failed for " + path);
  }

  if (bytes.size() < 12 || !tag_is(bytes.data(), "RIFF") ||
      !tag_is(bytes.data() + 8, "WAVE")) {
    throw Error(ErrorCode::kMalformedWav, path + ": not a RIFF/WAVE file");
  }

  FmtChunk fmt;
  bool have_fmt = false;
  size_t data_offset = 0;
  uint32_t data_size = 0;
  bool have_data = false;

  // Walk the chunk list. Chunks are padded to even sizes.
  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const uint8_t* header = bytes.data() + pos;
    uint32_t chunk_size = read_u32(header + 4);
    size_t body = pos + 8;

    if (tag_is(header, "fmt ")) {
      if (chunk_size < 16 || body + 16 > bytes.size()) {
        throw Error(ErrorCode::kMalformedWav, path + ": truncated fmt chunk");
      }
      const uint8_t* f = bytes.data() + body;
      fmt.audio_format = read_u16(f);
      fmt.channels = read_u16(f + 2);
      fmt.sample_rate = read_u32(f + 4);
      fmt.bits_per_sample = read_u16(f + 14);
      have_fmt = true;
    } else if (tag_is(header, "data")) {
      data_offset = body;
      data_size = chunk_size;
      have_data = true;
      // The declared length must be backed by real bytes.
      if (body + static_cast<size_t>(chunk_size) > bytes.size()) {
        throw Error(ErrorCode::kMalformedWav,
                    path + ": data chunk declares more bytes than the file holds");
      }
    }
    pos = body + chunk_size + (chunk_size & 1);
  }

  if (!have_fmt || !have_data) {
    throw Error(ErrorCode::kMalformedWav,
                path + ": missing fmt or data chunk");
  }
  if (fmt.audio_format != kFormatPcm || fmt.bits_per_sample != 16) {
    throw Error(ErrorCode::kUnsupportedFormat,
                path + ": only 16-bit PCM is supported");
  }
  if (fmt.channels != 1) {
    throw Error(ErrorCode::kUnsupportedFormat,
                path + ": only mono is supported");
  }
  if (fmt.sample_rate != static_cast<uint32_t>(kRequiredSampleRate)) {
    throw Error(ErrorCode::kSampleRateMismatch,
                path + ": sample rate " + std::to_string(fmt.sample_rate) +
                    " (expected " + std::to_string(kRequiredSampleRate) + ")");
  }
  if (data_size < 2 || data_size % 2 != 0) {
    throw Error(ErrorCode::kMalformedWav,
                path + ": data chunk holds no whole 16-bit sample");
  }

  AudioClip clip;
  clip.sample_rate = kRequiredSampleRate;
  size_t count = data_size / 2;
  clip.samples.resize(count);
  const uint8_t* d = bytes.data() + data_offset;
  for (size_t i = 0; i < count; ++i) {
    int16_t v = static_cast<int16_t>(read_u16(d + 2 * i));
    clip.samples[i] = static_cast<double>(v) / 32768.0;
  }
  return clip;
}

void save_wav(const std::string& path, const AudioClip& clip) {
  for (double s : clip.samples) {
    if (!std::isfinite(s)) {
      throw Error(ErrorCode::kInvalidConfig, "non-finite sample");
    }
  }

  std::vector<uint8_t> pcm(clip.samples.size() * 2);
  for (size_t i = 0; i < clip.samples.size(); ++i) {
    double clamped = std::clamp(clip.samples[i], -1.0, 1.0);
    long q = std::lround(clamped * 32768.0);
    q = std::min(q, 32767L);  // 1.0 maps to the largest code
    pcm[2 * i] = static_cast<uint8_t>(q & 0xff);
    pcm[2 * i + 1] = static_cast<uint8_t>((q >> 8) & 0xff);
  }

  uint32_t data_size = static_cast<uint32_t>(pcm.size());
  uint32_t sample_rate = static_cast<uint32_t>(clip.sample_rate);
  uint32_t byte_rate = sample_rate * 2;

  uint8_t header[44];
  auto put_u32 = [&](size_t at, uint32_t v) {
    header[at] = static_cast<uint8_t>(v & 0xff);
    header[at + 1] = static_cast<uint8_t>((v >> 8) & 0xff);
    header[at + 2] = static_cast<uint8_t>((v >> 16) & 0xff);
    header[at + 3] = static_cast<uint8_t>((v >> 24) & 0xff);
  };
  auto put_u16 = [&](size_t at, uint16_t v) {
    header[at] = static_cast<uint8_t>(v & 0xff);
    header[at + 1] = static_cast<uint8_t>((v >> 8) & 0xff);
  };
  std::memcpy(header, "RIFF", 4);
  put_u32(4, 36 + data_size);
  std::memcpy(header + 8, "WAVE", 4);
  std::memcpy(header + 12, "fmt ", 4);
  put_u32(16, 16);
  put_u16(20, kFormatPcm);
  put_u16(22, 1);  // mono
  put_u32(24, sample_rate);
  put_u32(28, byte_rate);
  put_u16(32, 2);   // block align
  put_u16(34, 16);  // bits per sample
  std::memcpy(header + 36, "data", 4);
  put_u32(40, data_size);

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorCode::kIoFailure, "cannot open " + path + " for writing");
  }
  file.write(reinterpret_cast<const char*>(header), sizeof(header));
  file.write(reinterpret_cast<const char*>(pcm.data()),
             static_cast<std::streamsize>(pcm.size()));
  if (!file) {
    throw Error(ErrorCode::kIoFailure, "write failed for " + path);
  }
}

}  // namespace loudloss
