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

#include "c2link/conditional.hpp"
#include "c2link/kernels.hpp"

#include <algorithm>
#include <exception>

namespace c2link::kernels {

namespace {

// Exceptions may not cross an OpenMP region; keep the first one and rethrow.
class ErrorSlot {
public:
    template <class F>
    void run(F&& f)
    {
        try {
            f();
        } catch (...) {
#pragma omp critical(c2link_kernel_error)
            if (!error_)
                error_ = std::current_exception();
        }
    }
    void rethrow() const
    {
        if (error_)
            std::rethrow_exception(error_);
    }

private:
    std::exception_ptr error_;
};

template <class Fill>
std::vector<double> sample(const LinkModel& link, std::int64_t n, RngStream stream, Fill fill)
{
    const PreparedLink prepared(link);
    std::vector<double> out(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
    const std::int64_t chunks = detail::chunk_count(n);
    ErrorSlot err;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
        err.run([&] {
            const std::int64_t begin = c * kChunk;
            const std::int64_t len = std::min(kChunk, n - begin);
            fill(prepared, stream, c, std::span<double>(out.data() + begin, static_cast<std::size_t>(len)));
        });
    }
    err.rethrow();
    return out;
}

template <class Body>
MeanEstimate mean(std::span<const double> xs, Body body)
{
    const auto n = static_cast<std::int64_t>(xs.size());
    const std::int64_t chunks = detail::chunk_count(n);
    std::vector<detail::Partial> partials(static_cast<std::size_t>(chunks));
    ErrorSlot err;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
        err.run([&] {
            const std::int64_t begin = c * kChunk;
            partials[c] = body(xs.subspan(begin, std::min(kChunk, n - begin)));
        });
    }
    err.rethrow();
    return detail::reduce(partials, n);
}

} // namespace

std::vector<double> sample_sinr(const LinkModel& link, std::int64_t n, RngStream stream)
{
    return sample(link, n, stream, detail::fill_sinr_chunk);
}

std::vector<double> sample_impairment(const LinkModel& link, std::int64_t n, RngStream stream)
{
    return sample(link, n, stream, detail::fill_impairment_chunk);
}

MeanEstimate mean_fbl_error(std::span<const double> sinr, const FblSetting& setting)
{
    return mean(sinr, [&](std::span<const double> s) { return detail::fbl_error_chunk(s, setting); });
}

MeanEstimate mean_conditional_error(std::span<const double> impairment, const ConditionalErrorTable& table)
{
    return mean(impairment, [&](std::span<const double> s) { return detail::conditional_chunk(s, table); });
}

} // namespace c2link::kernels
