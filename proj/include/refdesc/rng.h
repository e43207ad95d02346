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

// Seeded random streams.
//
// Every randomized operation takes a 64-bit seed. Independent purposes draw
// from independent streams whose seeds are derived as
// DeriveSeed(seed, "purpose", indices...), so results do not depend on the
// order in which streams are consumed or on how work is split over threads.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. The std:: distributions are not (their algorithms are
// implementation-defined), so uniform integers, reals, Bernoulli and
// geometric draws are implemented here to keep outputs identical across
// standard libraries.

#ifndef REFDESC_RNG_H_
#define REFDESC_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace refdesc {

// SplitMix64 finalizer.
uint64_t MixBits(uint64_t x);

uint64_t DeriveSeed(uint64_t seed, std::string_view purpose,
                    std::initializer_list<uint64_t> indices = {});

class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t Next() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double Uniform();

  // Uniform in [0, n). n must be positive.
  uint64_t UniformInt(uint64_t n);

  bool Bernoulli(double p) { return Uniform() < p; }

  // Number of failures before the first success of a Bernoulli(p) trial
  // sequence. p must be in (0, 1].
  uint64_t Geometric(double p);

  template <typename T>
  void Shuffle(std::vector<T> &items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = UniformInt(i);
      std::swap(items[i - 1], items[j]);
    }
  }

  // k distinct values from [0, n), in draw order. Requires k <= n.
  std::vector<uint64_t> SampleDistinct(uint64_t n, uint64_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace refdesc

#endif  // REFDESC_RNG_H_
