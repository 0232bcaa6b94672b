//
// Copyright 2026 The Dialobust Authors
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

#ifndef DIALOBUST_CORE_RNG_H_
#define DIALOBUST_CORE_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace dialobust {

// Derives the seed of one work item (usually a dialogue) from the run seed.
//
//   MixSeed(seed, index) = splitmix64(seed + 0x9E3779B97F4A7C15 * (index + 1))
//
// where splitmix64 is the finalizer of Steele et al.'s SplitMix64 generator:
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z =  z ^ (z >> 31)
// All arithmetic is modulo 2^64. The value is part of the output contract:
// changing it changes every augmented corpus.
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t index);

// Platform-stable random source. std::mt19937_64's output sequence is fixed
// by the standard; the distributions in <random> are not, so the sampling
// helpers below are implemented here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform integer in [lo, hi]. Requires lo <= hi.
  std::uint64_t UniformInt(std::uint64_t lo, std::uint64_t hi);

  // Uniform index in [0, n). Requires n > 0.
  std::size_t Index(std::size_t n) { return UniformInt(0, n - 1); }

  // Uniform double in [0, 1) with 53 random bits.
  double UniformUnit();

  // Uniform double in [lo, hi].
  double UniformReal(double lo, double hi);

  bool Bernoulli(double p) { return UniformUnit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dialobust

#endif  // DIALOBUST_CORE_RNG_H_
