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

#include "doctest.h"
#include "support.hpp"
#include "wordforge/canonical.hpp"
#include "wordforge/oracle.hpp"
#include "wordforge/transforms.hpp"

using namespace wordforge;
using namespace wordforge::testing;

namespace {

// Body letters a, b, ... map to 1, 2, ...; '$' to the sentinel.
Word X(std::string_view s) {
    Word w;
    for (char c : s) w.push_back(c == '$' ? kSentinel : static_cast<Symbol>(c - 'a' + 1));
    return w;
}

}  // namespace

TEST_CASE("sentinel words") {
    const auto s = SentinelWord::from_body(L("abab"));
    CHECK(s.extended() == X("abab$"));
    CHECK(s.size() == 5);
    CHECK(SentinelWord::from_extended(X("ab$")).body() == L("ab"));
    CHECK_THROWS_AS(SentinelWord::from_extended(X("a$b")), Error);
    CHECK_THROWS_AS(SentinelWord::from_extended(X("a$$")), Error);
    CHECK(sentinel_alphabet(Alphabet::binary()).glyphs() == std::vector<std::string>{"$", "a", "b"});
    CHECK_THROWS_AS(sentinel_alphabet(Alphabet::from_chars("$a")), Error);
}

TEST_CASE("Burrows-Wheeler transform") {
    CHECK(bwt(SentinelWord::from_body(L("abab"))) == X("bb$aa"));
    CHECK(bwt(SentinelWord::from_body(L("a"))) == X("a$"));
    CHECK(bwt(SentinelWord::from_body(Word{})) == X("$"));
    const auto r = bwt_indexed(SentinelWord::from_body(L("abab")));
    CHECK(r.index == 2);
}

TEST_CASE("inverse transform") {
    CHECK(bwt_inverse(X("bb$aa")).body() == L("abab"));
    CHECK(bwt_inverse(X("a$")).extended() == X("a$"));
    CHECK(bwt_inverse(X("$")).body().empty());
    CHECK_THROWS_AS(bwt_inverse(X("ab")), Error);
    CHECK_THROWS_AS(bwt_inverse(X("a$$")), Error);
    CHECK_THROWS_AS(bwt_inverse(X("an$nbaa")), Error);
}

TEST_CASE("round trip on every short body") {
    for (std::size_t sigma : {2u, 3u})
        for (const Word& w : enumerate_words(sigma, 7)) {
            CAPTURE(letters(w));
            REQUIRE(bwt_inverse(bwt(SentinelWord::from_body(w))).body() == w);
        }
}

TEST_CASE("alternating transform") {
    const auto m = abwt_matrix(D("3177412"));
    CHECK(m.front() == D("1774123"));
    CHECK(abwt(L("ab")).last == L("ba"));
    CHECK(abwt(L("a")).last == L("a"));
    CHECK_THROWS_AS(abwt(L("abab")), Error);
    CHECK_THROWS_AS(abwt(Word{}), Error);
    for (const Word& w : enumerate_words(2, 9)) {
        if (w.empty() || !is_primitive(w)) continue;
        const auto r = abwt(w);
        CHECK(abwt_matrix(w).front() == galois_rotation(w).word);
        CHECK(abwt_matrix(w)[r.index] == w);
    }
}
