// SPDX-License-Identifier: Apache-2.0
//
// c2link: URLLC multi-connectivity link simulator for aerial vehicles
// Copyright (C) 2026 The c2link authors
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

#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace c2link {

/// Identifies one independent, replayable random sequence.
///
/// Two streams with equal (seed, stream_id) produce identical variates. Work
/// that is split across threads derives child streams with substream() so the
/// result never depends on which worker consumed which chunk.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    [[nodiscard]] RngStream substream(std::uint64_t index) const;

    friend bool operator==(const RngStream&, const RngStream&) = default;
};

/// Mixes an arbitrary number of 64-bit words into a stream id.
std::uint64_t mix_stream_id(std::uint64_t a, std::uint64_t b);
std::uint64_t mix_stream_id(std::uint64_t a, std::uint64_t b, std::uint64_t c);
std::uint64_t mix_stream_id(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);

/// SplitMix64 engine. Satisfies UniformRandomBitGenerator.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(RngStream stream);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    /// Uniform on the open interval (0, 1).
    double uniform();

    /// Standard normal variate.
    double normal();

private:
    std::uint64_t state_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace c2link
