// SPDX-License-Identifier: Apache-2.0
//
// risfocus - inter-RIS beam focusing codebook construction and evaluation
// Copyright (C) 2026 the risfocus contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISFOCUS_RNG_HPP
#define RISFOCUS_RNG_HPP

#include <cstdint>
#include <random>

namespace risfocus
{

// splitmix64 finalizer; used to derive independent sub-stream seeds.
uint64_t splitmix64(uint64_t x);

// Seed of the sub-stream identified by `key` under the master `seed`.
// Independent of the order in which sub-streams are created.
uint64_t substream_seed(uint64_t seed, uint64_t key);

// Seedable generator with a portable uniform mapping: draws do not depend
// on the standard library's distribution implementations.
class Rng
{
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1), 53-bit resolution.
    double uniform();

    // Uniform in [lo, hi).
    double uniform(double lo, double hi);

  private:
    std::mt19937_64 eng_;
};

} // namespace risfocus

#endif
