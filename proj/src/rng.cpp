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

#include "c2link/rng.hpp"

namespace c2link {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t finalize(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t mix_stream_id(std::uint64_t a, std::uint64_t b)
{
    return finalize(finalize(a + kGolden) ^ (b + 0x632BE59BD9B4E019ULL));
}

std::uint64_t mix_stream_id(std::uint64_t a, std::uint64_t b, std::uint64_t c)
{
    return mix_stream_id(mix_stream_id(a, b), c);
}

std::uint64_t mix_stream_id(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d)
{
    return mix_stream_id(mix_stream_id(a, b, c), d);
}

RngStream RngStream::substream(std::uint64_t index) const
{
    return RngStream{seed, mix_stream_id(stream_id, index)};
}

Rng::Rng(RngStream stream)
    : state_(mix_stream_id(stream.seed, stream.stream_id))
{
}

Rng::result_type Rng::operator()()
{
    state_ += kGolden;
    return finalize(state_);
}

double Rng::uniform()
{
    // 53 random mantissa bits, shifted off zero
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal()
{
    return normal_(*this);
}

} // namespace c2link
