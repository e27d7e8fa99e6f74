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

#include <cstdlib>
#include <string_view>
#include <vector>

#include "loudloss/kernels.h"

namespace loudloss {
namespace kernels {

#if defined(LOUDLOSS_HAVE_AVX2)
const Backend& avx2_backend();  // defined in avx2.cc

static bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif  // LOUDLOSS_HAVE_AVX2

std::vector<const Backend*> available_backends() {
  std::vector<const Backend*> list = {&scalar_backend()};
#if defined(LOUDLOSS_HAVE_AVX2)
  if (cpu_has_avx2()) {
    list.push_back(&avx2_backend());
  }
#endif
  return list;
}

namespace {

const Backend* find(std::string_view name) {
  for (const Backend* backend : available_backends()) {
    if (name == backend->name) {
      return backend;
    }
  }
  return nullptr;
}

const Backend* detect() {
  if (const char* env = std::getenv("LOUDLOSS_KERNELS")) {
    std::string_view wanted(env);
    if (!wanted.empty() && wanted != "auto") {
      if (const Backend* backend = find(wanted)) {
        return backend;
      }
      // Unknown or unavailable request: fall through to auto selection.
    }
  }
  return available_backends().back();  // widest variant this machine can run
}

const Backend*& active_slot() {
  static const Backend* backend = detect();
  return backend;
}

}  // namespace

const Backend& active() { return *active_slot(); }

bool select(std::string_view name) {
  if (name == "auto") {
    active_slot() = detect();
    return true;
  }
  if (const Backend* backend = find(name)) {
    active_slot() = backend;
    return true;
  }
  return false;
}

}  // namespace kernels
}  // namespace loudloss
