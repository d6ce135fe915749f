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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "wordforge/oracle.hpp"
#include "wordforge/word.hpp"

using namespace wordforge;
using namespace wordforge::testing;

TEST_CASE("alphabet encodes and decodes characters") {
    const Alphabet a = Alphabet::from_chars("abc");
    CHECK(a.encode("cab") == Word{2, 0, 1});
    CHECK(a.decode(Word{1, 1, 0}) == "bba");
    // Glyph order is the order given, so alphabets can be reordered.
    const Alphabet r = Alphabet::from_chars("cba");
    CHECK(r.glyphs() == std::vector<std::string>{"c", "b", "a"});
    CHECK(r.encode("cab") == Word{0, 2, 1});
    CHECK(a.single_char());
    CHECK_THROWS_AS(a.encode("abd"), Error);
}

TEST_CASE("integer alphabets order glyphs numerically") {
    const Alphabet a = Alphabet::integers({10, 2, 1, 2});
    CHECK(a.glyphs() == std::vector<std::string>{"1", "2", "10"});
    CHECK(a.encode("10 1,2", true) == Word{2, 0, 1});
    CHECK(a.decode(Word{2, 0}, " ") == "10 1");
    CHECK_FALSE(a.single_char());
}

TEST_CASE("alphabet specs") {
    CHECK(Alphabet::parse("a-e").size() == 5);
    CHECK(Alphabet::parse("ab") == Alphabet::binary());
    CHECK(Alphabet::parse("1,2,10").glyphs() == std::vector<std::string>{"1", "2", "10"});
    const std::vector<std::string> texts{"unique", "equitant"};
    CHECK(Alphabet::infer(texts).size() == 7);
    try {
        (void)Alphabet::parse("");
        FAIL("empty spec accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }
    CHECK_THROWS_AS(Alphabet::from_chars("aab"), Error);
}

TEST_CASE("rotations") {
    const auto rots = rotations(D("3177412"));
    const std::set<Word> got(rots.begin(), rots.end());
    const std::set<Word> want{D("3177412"), D("1774123"), D("7741231"), D("7412317"),
                              D("4123177"), D("1231774"), D("2317741")};
    CHECK(got == want);
    CHECK(rotations(L("a")) == Ls({"a"}));
    CHECK(rotations(L("abab")) == Ls({"abab", "baba", "abab", "baba"}));
    CHECK(rotate(L("abc"), 1) == L("bca"));
}

TEST_CASE("primitivity and periods") {
    CHECK_FALSE(is_primitive(L("ababab")));
    CHECK(is_primitive(L("a")));
    CHECK(is_primitive(L("abababbbbb")));
    CHECK(smallest_period(L("abaab")) == 3);
    CHECK(smallest_period(L("aaaa")) == 1);
    CHECK_THROWS_AS(is_primitive(Word{}), Error);
}

TEST_CASE("borders") {
    CHECK(borders(L("abcab")) == Ls({"ab"}));
    CHECK(borders(L("ababba")) == Ls({"a"}));
    CHECK(borders(L("aababb")).empty());
    CHECK(is_border_free(L("abababbb")));
    CHECK_FALSE(is_border_free(L("aa")));
    CHECK(is_border_free(L("abbb")));
    CHECK(failure_function(L("abab")) == std::vector<std::size_t>{0, 0, 0, 1, 2});
}

TEST_CASE("V-form") {
    VForm f = v_form(D("321312"));
    CHECK(f.max_letter == 3);
    CHECK(f.count == 2);
    CHECK(f.parts == std::vector<Word>{Word{}, D("21"), D("12")});
    CHECK(f.join() == D("321312"));

    f = v_form(D("7"));
    CHECK(f.count == 1);
    CHECK(f.parts == std::vector<Word>{Word{}, Word{}});

    f = v_form(D("929493"));
    CHECK(f.count == 3);
    CHECK(f.parts == std::vector<Word>{Word{}, D("2"), D("4"), D("3")});
}

TEST_CASE("star deletion") {
    CHECK(star_position(D("922911")) == 4);
    CHECK(star_delete(D("922911")) == D("92291"));
    CHECK(star_delete(D("9229")) == D("929"));
    CHECK(star_delete(D("99")) == D("9"));
    // Repeated deletion reaches the empty word in |w| steps.
    Word w = D("7547223");
    std::size_t steps = 0;
    while (!w.empty()) {
        w = star_delete(w);
        ++steps;
    }
    CHECK(steps == 7);
}

TEST_CASE("substring conjugates and units") {
    auto sc = substring_conjugates(D("929493"));
    CHECK(std::set<Word>(sc.begin(), sc.end()) == std::set<Word>{D("929493"), D("949392"), D("939294")});
    CHECK(substring_conjugates(D("9")) == Ds({"9"}));
    sc = substring_conjugates(D("431412"));
    CHECK(std::set<Word>(sc.begin(), sc.end()) == std::set<Word>{D("431412"), D("412431")});
    CHECK(v_units(D("431412")) == Ds({"431", "412"}));
    CHECK_THROWS_AS(v_units(D("3431")), Error);
}

TEST_CASE("subsequences and prefixes") {
    CHECK(is_subsequence(D("772"), D("7547223")));
    CHECK_FALSE(is_subsequence(D("27"), D("7547223")));
    CHECK(is_prefix(L("ab"), L("abb")));
    CHECK_FALSE(is_prefix(L("abb"), L("ab")));
    CHECK(concat(L("ab"), L("ba")) == L("abba"));
}

TEST_CASE("rotations of every short word stay in the class") {
    for (const Word& w : enumerate_words(2, 7)) {
        const auto rots = rotations(w);
        REQUIRE(rots.size() == w.size());
        for (const Word& r : rots) CHECK(is_primitive(r) == is_primitive(w));
        // Distinct rotations equal the smallest period for primitive words.
        const std::set<Word> distinct(rots.begin(), rots.end());
        if (is_primitive(w)) CHECK(distinct.size() == w.size());
    }
}
