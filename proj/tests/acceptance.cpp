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
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Counterexamples are printed under failing lines.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "wordforge/orders.hpp"
#include "wordforge/suites.hpp"

using namespace wordforge;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string& label, bool passed, const std::string& detail = "") {
    std::printf("%s  %s", passed ? "PASS" : "FAIL", label.c_str());
    if (!detail.empty()) std::printf("  (%s)", detail.c_str());
    std::printf("\n");
    if (!passed) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Runs a group of checks as one criterion under a time limit.
void criterion(const std::string& label, double limit_s, const std::function<std::vector<CheckResult>()>& body) {
    const auto t0 = Clock::now();
    const auto results = body();
    const double took = seconds_since(t0);
    bool ok = took < limit_s;
    std::size_t cases = 0;
    std::string notes;
    for (const auto& r : results) {
        ok = ok && r.passed;
        cases += r.cases;
        if (!r.passed && !r.note.empty()) notes += (notes.empty() ? "" : "; ") + r.note;
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%zu cases, %.2f s", cases, took);
    report(label, ok, notes.empty() ? timing : std::string(timing) + "; " + notes);
    if (ok) return;
    for (const auto& r : results) {
        if (r.passed) continue;
        std::size_t shown = 0;
        for (const auto& c : r.counterexamples) {
            if (shown++ == 5) break;
            std::printf("        %s: %s\n", r.name.c_str(), c.c_str());
        }
    }
}

}  // namespace

int main() {
    std::printf("== golden examples\n");
    const auto t0 = Clock::now();
    const auto golden = checks::golden();
    const double golden_s = seconds_since(t0);
    for (const auto& c : golden) {
        report(c.name, c.passed);
        for (const auto& ce : c.counterexamples) std::printf("        %s\n", ce.c_str());
    }
    char took[48];
    std::snprintf(took, sizeof took, "%.3f s", golden_s);
    report("golden examples finish in under 1 s", golden_s < 1.0, took);

    std::printf("== exhaustive properties\n");
    constexpr double kLimit = 60.0;
    criterion("lex, colex, relex, alt, modalt and vorder are strict total orders (binary, length <= 6)", kLimit, [] {
        std::vector<CheckResult> r;
        for (auto o : {"lex", "colex", "relex", "alt", "modalt", "vorder"})
            r.push_back(checks::order_axioms(OrderSpec::parse(o), 2, 6));
        return r;
    });
    criterion("V-order equals the star-tree comparison (binary and ternary, length <= 6)", kLimit, [] {
        return std::vector{checks::v_matches_star_tree(2, 6), checks::v_matches_star_tree(3, 6)};
    });
    criterion("a subsequence never follows its superword in V-order (length <= 8)", kLimit,
              [] { return std::vector{checks::v_subsequence(2, 8)}; });
    criterion("single-letter-part V-forms: V-word iff the core is Lyndon (<= 6 units)", kLimit,
              [] { return std::vector{checks::v_lyndon_equivalence(6)}; });
    criterion("Lyndon words lift to V-words (binary Lyndon, length <= 6, h <= 3)", kLimit,
              [] { return std::vector{checks::lyndon_to_v_words(6, 3)}; });
    criterion("proper suffixes of a Galois word follow it in alternating order (length <= 10)", kLimit,
              [] { return std::vector{checks::galois_suffix(10)}; });
    criterion("Galois u, v with uv primitive: u <alt v iff uv is Galois (|uv| <= 10)", kLimit,
              [] { return std::vector{checks::galois_concat(10)}; });
    criterion("border-free Galois words start with ab and end with bb (length <= 14)", kLimit,
              [] { return std::vector{checks::bbf_prefix_suffix(14)}; });
    criterion("border-free Galois iff ab-Galois units are least under lexext:modalt (3 < length <= 14)", kLimit,
              [] { return std::vector{checks::bbf_routes_agree(14)}; });
    criterion("xyz rule rejects the Fibonacci family with x=abaab, y=aba, z=ab", kLimit,
              [] { return std::vector{checks::fibonacci_witness()}; });
    criterion("xyz closure of {a,b,c,ab,abc,cab} contains abcab and abcabc", kLimit,
              [] { return std::vector{checks::closure_example()}; });
    for (auto o : {"lex", "colex", "relex", "vorder"})
        criterion(std::string("border-free ") + o + "-minimal rotations form a circ-UMFF (length <= 8)", kLimit,
                  [o] { return std::vector{checks::tword_circ_umff(OrderSpec::parse(o), 8)}; });
    criterion("alt-minimal rotations: unrepresented classes are reported with witnesses (length <= 8)", kLimit,
              [] { return std::vector{checks::tword_circ_umff(OrderSpec::parse("alt"), 8)}; });
    criterion("maximal factorization matches the exhaustive oracle for Lyndon and V-word families (length <= 12)",
              kLimit, [] {
                  return std::vector{checks::factorizer_matches_oracle("lyndon", 12),
                                     checks::factorizer_matches_oracle("vword", 12)};
              });
    criterion("bwt and unbwt round-trip on binary bodies (length <= 10)", kLimit,
              [] { return std::vector{checks::bwt_round_trip(10)}; });
    criterion("alternating transform first row is the Galois rotation (primitive binary, length <= 10)", kLimit,
              [] { return std::vector{checks::abwt_first_row(10)}; });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
