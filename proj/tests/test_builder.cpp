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

#include <set>

#include "doctest.h"
#include "support.hpp"
#include "wordforge/builder.hpp"
#include "wordforge/oracle.hpp"

using namespace wordforge;
using namespace wordforge::testing;

TEST_CASE("sigma star in block order") {
    CHECK(create_sigma_star(1) == Ls({"a", "b"}));
    CHECK(create_sigma_star(2) == Ls({"a", "b", "aa", "ab", "ba", "bb"}));
    CHECK(create_sigma_star(5).size() == 62);
    // Same words as the length-lex enumeration.
    const auto words = create_sigma_star(6);
    const auto expect = enumerate_words(2, 6);
    CHECK(std::set<Word>(words.begin(), words.end()) == std::set<Word>(expect.begin(), expect.end()));
    CHECK_THROWS_AS(create_sigma_star(21), Error);
}

TEST_CASE("enlarging {a, b, abb, ababb} to a circ-UMFF") {
    const auto input = FactorFamily::extensional(Alphabet::binary(), Ls({"a", "b", "abb", "ababb"}));
    const BuildResult r = build_circ_umff(input, 5);
    const auto got = r.family.members(5);
    const auto want = Ls({"a", "b", "ab", "aab", "abb", "aaab", "aabb", "abbb", "aaaab", "aaabb", "aabab", "aabbb",
                          "ababb", "abbbb"});
    CHECK(std::set<Word>(got.begin(), got.end()) == std::set<Word>(want.begin(), want.end()));
    CHECK(r.verdict.passed());
    CHECK(r.members.size() == 14);
    CHECK(r.members[0].origin == Origin::Letter);
    CHECK(r.members[2].word == L("ab"));
    CHECK(r.members[2].origin == Origin::Seed);
    for (const auto& m : r.members)
        if (m.origin == Origin::Synthesized) {
            CHECK(m.s != m.t);
            CHECK(concat(r.members[m.s].word, r.members[m.t].word) == m.word);
        }
}

TEST_CASE("enlarging short Lyndon words") {
    const auto input = FactorFamily::extensional(Alphabet::binary(), Ls({"a", "b", "ab", "aab", "abb"}));
    const BuildResult r = build_circ_umff(input, 4);
    for (const Word& w : input.members(3)) CHECK(r.family.contains(w));
    CHECK(circ_umff_verify(r.family, 4).passed());
}

TEST_CASE("builder output is deterministic and verified for several caps") {
    const auto input = FactorFamily::extensional(Alphabet::binary(), Ls({"a", "b", "abb", "ababb"}));
    for (std::size_t cap = 5; cap <= 8; ++cap) {
        CAPTURE(cap);
        const auto a = build_circ_umff(input, cap);
        const auto b = build_circ_umff(input, cap);
        CHECK(a.family.members(cap) == b.family.members(cap));
        CHECK(circ_umff_verify(a.family, cap).passed());
        for (const Word& w : a.family.members(cap)) CHECK(is_border_free(w));
    }
}

TEST_CASE("builder rejects bad input") {
    auto kind = [](std::vector<Word> members, std::size_t cap) {
        try {
            (void)build_circ_umff(FactorFamily::extensional(Alphabet::binary(), std::move(members)), cap);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Parse;
    };
    CHECK(kind(Ls({"a", "ab", "abb"}), 4) == ErrorKind::NotFF);
    CHECK(kind(Ls({"a", "b", "aba"}), 4) == ErrorKind::NotBorderFree);
    CHECK(kind(Ls({"a", "b", "ab", "ba"}), 4) == ErrorKind::NotUMFF);
    CHECK(kind(Ls({"a", "b", "abb"}), 21) == ErrorKind::CapExceeded);
    const auto ternary = FactorFamily::extensional(Alphabet::from_chars("abc"), Ls({"a", "b", "c", "ab"}));
    CHECK_THROWS_AS(build_circ_umff(ternary, 4), Error);
}
