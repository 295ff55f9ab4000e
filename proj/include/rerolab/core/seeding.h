//
// Copyright 2026 The Rerolab Authors
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

#ifndef REROLAB_CORE_SEEDING_H_
#define REROLAB_CORE_SEEDING_H_

#include <cstdint>
#include <random>
#include <span>

namespace rerolab {

// Per-trial random streams.
//
// There is no shared generator. Every consumer of randomness derives its own
// engine from (master seed, domain, counter):
//
//   key    = Mix64(master_seed ^ Mix64(domain))
//   stream = Mix64(key + kGolden * (counter + 1))
//
// where Mix64 is the SplitMix64 finalizer. The engine is std::mt19937_64
// seeded with `stream`. Because a stream depends only on its coordinates, a
// trial draws the same values whether it runs first, last, or on another
// thread.
using StreamEngine = std::mt19937_64;

enum class StreamDomain : std::uint64_t {
  kTrial = 1,
  kAdversary = 2,
};

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t DeriveStreamSeed(std::uint64_t master_seed,
                                         StreamDomain domain,
                                         std::uint64_t counter) {
  const std::uint64_t key =
      Mix64(master_seed ^ Mix64(static_cast<std::uint64_t>(domain)));
  return Mix64(key + kGolden * (counter + 1));
}

inline StreamEngine MakeTrialEngine(std::uint64_t master_seed,
                                    std::uint64_t trial) {
  return StreamEngine(DeriveStreamSeed(master_seed, StreamDomain::kTrial, trial));
}

// Uniform double in [0, 1) from the top 53 bits of one engine draw. Spelled
// out instead of std::uniform_real_distribution so the mapping is identical
// across standard library implementations.
inline double UniformUnit(StreamEngine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound), bound >= 1.
inline std::uint64_t UniformIndex(StreamEngine& engine, std::uint64_t bound) {
  const auto index =
      static_cast<std::uint64_t>(UniformUnit(engine) * static_cast<double>(bound));
  return index < bound ? index : bound - 1;
}

// Inverse-CDF draw. `cdf` is non-decreasing with cdf.back() ~= 1; the last
// index with positive mass absorbs rounding slack.
inline std::size_t SampleFromCdf(StreamEngine& engine,
                                 std::span<const double> cdf) {
  const double u = UniformUnit(engine) * cdf.back();
  std::size_t lo = 0;
  std::size_t hi = cdf.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (u < cdf[mid]) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace rerolab

#endif  // REROLAB_CORE_SEEDING_H_
