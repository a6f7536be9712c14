// Copyright 2026 The gbit Authors
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

#pragma once

#include <cstdint>
#include <random>

namespace gbit {

/// Independent sub-stream identifiers. Keeping them distinct guarantees that
/// e.g. arm A and arm B draws for the same sample index never share bits.
enum class Stream : std::uint32_t {
    haar = 0,
    arm_a = 1,
    arm_b = 2,
    multistart = 3,
    probe = 4,
};

/// Deterministic 64-bit seed for the sample `(seed, index)` on `stream`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, Stream stream = Stream::haar);

/// Engine for one sample; samples never share generator state.
std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index, Stream stream);

}  // namespace gbit
