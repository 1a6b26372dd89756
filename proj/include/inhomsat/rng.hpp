// Copyright 2026 The inhomsat Authors
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

#ifndef INHOMSAT_RNG_HPP_
#define INHOMSAT_RNG_HPP_

// Counter-based randomness built on the SplitMix64 output function.
//
// Every random draw is a pure function of (key, counter): the i-th value of
// stream `key` is Mix64(key + (i + 1) * kGolden). Samplers give each
// potential clause its own counter, so two samples that share a key see the
// same uniform for the same clause no matter which kernel or scale is used.
// That is what makes the monotone coupling between scales exact.

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace inhomsat {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Folds a list of words into a key: Mix(...Mix(Mix(seed) ^ a) ^ b ...).
constexpr std::uint64_t DeriveKey(std::uint64_t seed,
                                  std::initializer_list<std::uint64_t> parts) {
  std::uint64_t k = Mix64(seed + kGolden);
  for (std::uint64_t p : parts) k = Mix64(k ^ (p + kGolden));
  return k;
}

constexpr std::uint64_t CounterDraw(std::uint64_t key, std::uint64_t counter) {
  return Mix64(key + (counter + 1) * kGolden);
}

// Uniform in [0,1) with 53 random bits.
constexpr double ToUnit(std::uint64_t bits) {
  return double(bits >> 11) * 0x1.0p-53;
}

// Sequential view of one counter stream; satisfies
// UniformRandomBitGenerator so it plugs into <random> distributions.
class CounterStream {
 public:
  using result_type = std::uint64_t;

  explicit constexpr CounterStream(std::uint64_t key) : key_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() { return CounterDraw(key_, counter_++); }
  double Uniform() { return ToUnit((*this)()); }

  constexpr std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Domain tags that keep the streams of different sampler stages apart.
enum class StreamTag : std::uint64_t {
  kTypes = 0x7479706573ULL,     // variable types
  kSigns = 0x7369676e73ULL,     // dagger/digraph signs
  kClauses = 0x636c61757365ULL, // per-clause uniforms
  kArcs = 0x61726373ULL,        // per-arc uniforms
  kMask = 0x6d61736bULL,        // flip masks
};

constexpr std::uint64_t StreamKey(std::uint64_t seed, StreamTag tag) {
  return DeriveKey(seed, {static_cast<std::uint64_t>(tag)});
}

}  // namespace inhomsat

#endif  // INHOMSAT_RNG_HPP_
