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

#ifndef LOUDLOSS_AUDIO_IO_H_
#define LOUDLOSS_AUDIO_IO_H_

#include <string>

#include "loudloss/types.h"

namespace loudloss {

inline constexpr int kRequiredSampleRate = 16000;

// Loads a mono 16-bit PCM RIFF/WAVE file sampled at 16 kHz. Samples are
// normalized to [-1, 1) by dividing by 32768. Unknown chunks are skipped;
// a data chunk whose declared length exceeds the bytes actually present, or
// that holds no complete sample, is rejected (kMalformedWav). Non-PCM,
// non-mono or non-16-bit files raise kUnsupportedFormat; any other sample
// rate raises kSampleRateMismatch.
AudioClip load_wav(const std::string& path);

// Writes a mono 16-bit PCM RIFF/WAVE file. Samples are clamped to
// [-1, 32767/32768], scaled by 32768 and rounded to the nearest integer,
// so save followed by load changes a sample by at most 2^-15.
void save_wav(const std::string& path, const AudioClip& clip);

}  // namespace loudloss

#endif  // LOUDLOSS_AUDIO_IO_H_
