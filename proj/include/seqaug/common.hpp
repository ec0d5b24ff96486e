/*
 * Copyright 2026 The seqaug Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqaug {

using UserId = std::uint32_t;
using ItemId = std::uint32_t;

// Dense ids start at 1; item id 0 is the padding/mask sentinel.
inline constexpr ItemId kMaskSentinel = 0;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Folds stream tags into a base seed so that substreams (per user, per
// pipeline stage, ...) are statistically independent and order-free.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t h = splitmix64(base);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  h = splitmix64(h ^ c);
  return h;
}

// Deterministic generator. All bounded draws are implemented here on top of
// mt19937_64 raw output, which the standard pins bit-exactly; none of the
// implementation-defined <random> distributions are used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, bound). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw Error("Rng::below: bound must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t v = eng_();
    while (v >= limit) v = eng_();
    return v % bound;
  }

  std::size_t index(std::size_t size) {
    return static_cast<std::size_t>(below(size));
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[index(v.size())];
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[index(i)]);
  }

  // k distinct indices drawn uniformly from [0, n), in draw order.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
    if (k > n) throw Error("Rng::sample_indices: k exceeds population");
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i)
      std::swap(pool[i], pool[i + index(n - i)]);
    pool.resize(k);
    return pool;
  }

 private:
  std::mt19937_64 eng_;
};

// Stream tags for seed derivation. Values are arbitrary but frozen: changing
// them changes every downstream random draw.
namespace stream {
inline constexpr std::uint64_t subset = 0xA1;
inline constexpr std::uint64_t augment = 0xA2;
inline constexpr std::uint64_t embed = 0xA3;
inline constexpr std::uint64_t train = 0xA4;
inline constexpr std::uint64_t eval = 0xA5;
inline constexpr std::uint64_t user = 0xB1;
}  // namespace stream

}  // namespace seqaug
