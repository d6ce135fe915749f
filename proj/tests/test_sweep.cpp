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

#include <stdexcept>

#include "doctest.h"
#include "wordforge/canonical.hpp"
#include "wordforge/oracle.hpp"
#include "wordforge/sweep.hpp"

using namespace wordforge;
using namespace wordforge::sweep;

TEST_CASE("parallel selection equals the serial reference") {
    const std::size_t n = word_count(2, 14);
    auto lyndon = [](std::size_t r) {
        const Word w = word_at(2, r);
        return !w.empty() && is_lyndon(w);
    };
    const auto serial = select_serial(n, lyndon);
    CHECK(select_parallel(n, lyndon) == serial);
    CHECK(count_parallel(n, lyndon) == serial.size());
    CHECK(count_serial(n, lyndon) == serial.size());
    CHECK(find_first_parallel(n, lyndon) == serial.front());
    CHECK(find_first_parallel(n, [](std::size_t) { return false; }) == n);
}

TEST_CASE("exceptions cross the parallel region") {
    auto boom = [](std::size_t i) -> bool {
        if (i == 777) throw std::runtime_error("boom");
        return true;
    };
    CHECK_THROWS_AS(select_parallel(2000, boom), std::runtime_error);
    CHECK_THROWS_AS(count_parallel(2000, boom), std::runtime_error);
}
