// Copyright 2026 The fuzzyqm developers
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

#ifndef FUZZYQM_RNG_HPP
#define FUZZYQM_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace fuzzyqm {

/// Seeded random source for all sampling operations.
///
/// Every randomized operation takes an Rng explicitly; generators are never
/// shared implicitly, so runs are reproducible from the seed alone. A single
/// Rng must not be used from multiple threads; derive per-task children with
/// fork() instead.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform double in [0, 1).
  double uniform() { return uniform_(engine_); }

  /// Standard normal deviate.
  double gaussian() { return normal_(engine_); }

  /// Complex deviate with independent standard normal real/imaginary parts.
  std::complex<double> complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  /// Integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

  /// Child generator with an independent, seed-derived stream.
  Rng fork(std::uint64_t stream) const {
    return Rng(seed_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  }

  std::mt19937_64 &engine() { return engine_; }

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

} // namespace fuzzyqm

#endif // FUZZYQM_RNG_HPP
