// Copyright 2026 The refdesc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "refdesc/rng.h"

#include <cmath>
#include <limits>
#include <unordered_set>

namespace refdesc {

uint64_t MixBits(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t DeriveSeed(uint64_t seed, std::string_view purpose,
                    std::initializer_list<uint64_t> indices) {
  // FNV-1a over the purpose tag.
  uint64_t tag = 0xcbf29ce484222325ULL;
  for (unsigned char c : purpose) {
    tag ^= c;
    tag *= 0x100000001b3ULL;
  }
  uint64_t h = MixBits(seed ^ MixBits(tag));
  for (uint64_t index : indices) h = MixBits(h ^ MixBits(index + 1));
  return h;
}

Rng::Rng(uint64_t seed) : engine_(MixBits(seed)) {}

double Rng::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

uint64_t Rng::UniformInt(uint64_t n) {
  // Lemire's multiply-and-reject.
  unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * n;
  uint64_t low = static_cast<uint64_t>(m);
  if (low < n) {
    uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(engine_()) * n;
      low = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

uint64_t Rng::Geometric(double p) {
  if (p >= 1.0) return 0;
  double u = Uniform();
  // 1 - u is in (0, 1], so the log is finite.
  double skips = std::floor(std::log1p(-u) / std::log1p(-p));
  if (skips >= static_cast<double>(std::numeric_limits<uint64_t>::max() / 2)) {
    return std::numeric_limits<uint64_t>::max() / 2;
  }
  return static_cast<uint64_t>(skips);
}

std::vector<uint64_t> Rng::SampleDistinct(uint64_t n, uint64_t k) {
  std::vector<uint64_t> out;
  out.reserve(k);
  if (k * 4 >= n) {
    // Dense: partial Fisher-Yates.
    std::vector<uint64_t> all(n);
    for (uint64_t i = 0; i < n; ++i) all[i] = i;
    for (uint64_t i = 0; i < k; ++i) {
      uint64_t j = i + UniformInt(n - i);
      std::swap(all[i], all[j]);
      out.push_back(all[i]);
    }
    return out;
  }
  std::unordered_set<uint64_t> seen;
  while (out.size() < k) {
    uint64_t v = UniformInt(n);
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

}  // namespace refdesc
