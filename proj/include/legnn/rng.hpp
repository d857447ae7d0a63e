// Copyright 2026 The LEGNN-cpp Authors.
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

#pragma once

#include <cstdint>
#include <random>

namespace legnn {

using Rng = std::mt19937_64;

// Fixed stream tags so that every consumer of a run seed draws from its own
// independent generator.
enum class Stream : std::uint64_t {
  kInit = 1,
  kDropout = 2,
  kMask = 3,
  kNoise = 4,
  kSplit = 5,
  kGraph = 6,
  kFeatures = 7,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives a generator for (seed, index). Distinct indices give statistically
// independent streams; the mapping is stable across runs and platforms.
inline Rng make_stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

inline Rng make_stream(std::uint64_t seed, Stream tag, std::uint64_t index = 0) {
  return make_stream(splitmix64(seed + static_cast<std::uint64_t>(tag)), index);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace legnn
