/* Copyright 2026 The wordforge Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Index sweeps over [0, n): a serial reference and an OpenMP kernel.
//
// Exhaustive checks are written as a predicate over an index (usually a word
// rank, see oracle.hpp). Both variants return identical, ascending results
// regardless of thread count; the serial one is kept as the reference the
// parallel one is tested against.

#ifndef WORDFORGE_SWEEP_HPP
#define WORDFORGE_SWEEP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

#include <omp.h>

namespace wordforge::sweep {

template <class Pred>
std::vector<std::size_t> select_serial(std::size_t n, Pred&& pred) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (pred(i)) out.push_back(i);
    return out;
}

template <class Pred>
std::vector<std::size_t> select_parallel(std::size_t n, Pred&& pred) {
    const auto count = static_cast<std::int64_t>(n);
    std::vector<std::vector<std::size_t>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
    std::exception_ptr error;
    #pragma omp parallel
    {
        auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
        #pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                if (pred(static_cast<std::size_t>(i))) local.push_back(static_cast<std::size_t>(i));
            } catch (...) {
                #pragma omp critical(wordforge_sweep_error)
                if (!error) error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
    std::vector<std::size_t> out;
    for (auto& v : per_thread) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

template <class Pred>
std::size_t count_serial(std::size_t n, Pred&& pred) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (pred(i)) ++c;
    return c;
}

template <class Pred>
std::size_t count_parallel(std::size_t n, Pred&& pred) {
    const auto count = static_cast<std::int64_t>(n);
    std::int64_t c = 0;
    std::exception_ptr error;
    #pragma omp parallel for schedule(dynamic, 64) reduction(+ : c)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            if (pred(static_cast<std::size_t>(i))) ++c;
        } catch (...) {
            #pragma omp critical(wordforge_sweep_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return static_cast<std::size_t>(c);
}

// The first index (smallest) satisfying `pred`, or n.
template <class Pred>
std::size_t find_first_parallel(std::size_t n, Pred&& pred) {
    auto hits = select_parallel(n, pred);
    return hits.empty() ? n : hits.front();
}

}  // namespace wordforge::sweep

#endif  // WORDFORGE_SWEEP_HPP
