// SPDX-License-Identifier: Apache-2.0
//
// sclink - link-level simulator for MIMO millimeter-wave single-carrier links
// Copyright (C) 2026 The sclink authors
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

#ifndef SCLINK_PARALLEL_HPP
#define SCLINK_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace sclink
{

// Runs fn(i) for i in [0, n) on up to `workers` threads. Tasks write into index-addressed
// slots, so results never depend on scheduling. The exception of the lowest failing index
// is rethrown after all workers have joined.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn &&fn)
{
    if (n == 0)
        return;
    workers = std::clamp<std::size_t>(workers, 1, n);

    std::vector<std::exception_ptr> errors(n);
    if (workers == 1)
    {
        for (std::size_t i = 0; i < n; ++i)
        {
            try
            {
                fn(i);
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
    }
    else
    {
        std::atomic<std::size_t> next{0};
        auto body = [&]
        {
            for (std::size_t i = next++; i < n; i = next++)
            {
                try
                {
                    fn(i);
                }
                catch (...)
                {
                    errors[i] = std::current_exception();
                }
            }
        };
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(body);
    }

    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace sclink

#endif
