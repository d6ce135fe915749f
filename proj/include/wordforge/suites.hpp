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
// Exhaustive desk-scale verification suites, shared by `wordforge verify`
// and the acceptance runner. Every check reports how many cases it visited
// and the first few counterexamples.

#ifndef WORDFORGE_SUITES_HPP
#define WORDFORGE_SUITES_HPP

#include <string>
#include <vector>

#include "wordforge/orders.hpp"

namespace wordforge {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::vector<std::string> counterexamples;
    std::string note;
};

namespace checks {

// Words over the first `sigma` letters a, b, c, ... up to max_len.
CheckResult order_axioms(const OrderSpec& order, std::size_t sigma, std::size_t max_len);
CheckResult v_matches_star_tree(std::size_t sigma, std::size_t max_len);
CheckResult v_subsequence(std::size_t sigma, std::size_t max_len);
CheckResult modalt_matches_search(std::size_t max_len);
CheckResult v_lyndon_equivalence(std::size_t max_units);
CheckResult lyndon_to_v_words(std::size_t max_lyndon_len, std::size_t max_h);

CheckResult galois_suffix(std::size_t max_len);
CheckResult galois_concat(std::size_t max_len);
CheckResult bbf_prefix_suffix(std::size_t max_len);
CheckResult bbf_routes_agree(std::size_t max_len);

CheckResult fibonacci_witness();
CheckResult closure_example();
CheckResult galois_bf_xyz(std::size_t max_len);
// Border-free minimal rotations under `order` as a circ-UMFF. For orders
// whose classes can have bordered minima the check passes when those
// classes are reported as witnesses.
CheckResult tword_circ_umff(const OrderSpec& order, std::size_t max_len);
CheckResult substring_circ_umff(OrderKind inner, std::size_t max_units);
// family: "lyndon" or "vword".
CheckResult factorizer_matches_oracle(const std::string& family, std::size_t max_len);
CheckResult border_free_ff_random(std::size_t families, unsigned seed);

CheckResult bwt_round_trip(std::size_t max_len);
CheckResult abwt_first_row(std::size_t max_len);

// Worked examples with fixed expected values.
std::vector<CheckResult> golden();

}  // namespace checks

struct SuiteReport {
    std::string suite;
    std::size_t max_len = 0;
    std::vector<CheckResult> checks;
    bool passed() const;
};

std::vector<std::string> suite_names();
// paper, orders, galois, umff or transforms. max_len scales the exhaustive bounds (each
// check keeps its own ceiling so a suite stays desk-scale).
SuiteReport run_suite(const std::string& name, std::size_t max_len);

}  // namespace wordforge

#endif  // WORDFORGE_SUITES_HPP
