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
// Serial vs OpenMP timing for the exhaustive word sweeps behind the
// verification suites. Usage: bench_sweep [max_len] [repeats]

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "wordforge/canonical.hpp"
#include "wordforge/oracle.hpp"
#include "wordforge/orders.hpp"
#include "wordforge/sweep.hpp"

using namespace wordforge;

namespace {

struct Kernel {
    const char* name;
    std::function<bool(std::size_t)> pred;
};

double best_of(int repeats, const std::function<std::size_t()>& run, std::size_t& result) {
    double best = 1e30;
    for (int r = 0; r < repeats; ++r) {
        const double t0 = omp_get_wtime();
        result = run();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t max_len = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 16;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    const std::size_t n = word_count(2, max_len);
    const Order alt(OrderSpec::parse("alt"), 2);

    const std::vector<Kernel> kernels{
        {"lyndon", [](std::size_t r) { return is_lyndon(word_at(2, r)); }},
        {"v-word", [](std::size_t r) { return is_v_word(word_at(2, r)); }},
        {"galois", [](std::size_t r) { return is_galois(word_at(2, r)); }},
        {"bbf-galois", [](std::size_t r) { return is_bbf_galois(word_at(2, r)); }},
        {"alt-minimal", [&alt](std::size_t r) { return is_t_word(alt, word_at(2, r)); }},
    };

    std::printf("binary words up to length %zu: %zu, threads: %d, best of %d\n", max_len, n, omp_get_max_threads(),
                repeats);
    std::printf("%-12s %10s %10s %10s %8s\n", "kernel", "matches", "serial s", "omp s", "speedup");
    int mismatches = 0;
    for (const auto& k : kernels) {
        std::size_t serial = 0, parallel = 0;
        const double ts = best_of(repeats, [&] { return sweep::count_serial(n, k.pred); }, serial);
        const double tp = best_of(repeats, [&] { return sweep::count_parallel(n, k.pred); }, parallel);
        if (serial != parallel) ++mismatches;
        std::printf("%-12s %10zu %10.4f %10.4f %7.2fx%s\n", k.name, serial, ts, tp, ts / tp,
                    serial == parallel ? "" : "  MISMATCH");
    }
    return mismatches == 0 ? 0 : 1;
}
