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

#include <cstdlib>

#include "doctest.h"
#include "support.hpp"
#include "wordforge/family.hpp"
#include "wordforge/oracle.hpp"

using namespace wordforge;
using namespace wordforge::testing;

TEST_CASE("enumeration in length-lex order") {
    CHECK(enumerate_words(2, 2) == Ls({"a", "b", "aa", "ab", "ba", "bb"}));
    CHECK(enumerate_words(Alphabet::from_chars("abc"), 1) == Ls({"a", "b", "c"}));
    CHECK(enumerate_words(2, 8).size() == 510);
    CHECK(enumerate_length(3, 2).size() == 9);
    CHECK(word_count(2, 8) == 510);
    for (std::size_t r = 0; r < 40; ++r) CHECK(word_at(3, r) == enumerate_words(3, 4)[r]);
}

TEST_CASE("exhaustive cap") {
    CHECK(exhaustive_cap() == 20);
    CHECK_THROWS_AS(word_count(2, 21), Error);
    setenv("WORDFORGE_MAX_LEN", "22", 1);
    CHECK(exhaustive_cap() == 22);
    CHECK(word_count(2, 21) == (std::size_t{1} << 22) - 2);
    unsetenv("WORDFORGE_MAX_LEN");
}

TEST_CASE("all factorizations") {
    const auto f = FactorFamily::extensional(Alphabet::from_chars("abcd"), Ls({"a", "b", "c", "d", "ab", "cd", "bcd"}));
    const auto all = all_factorizations(f, L("abcd"));
    // (ab)(c)(d) and (a)(b)(cd) as well.
    CHECK(all.size() == 5);
    std::vector<std::vector<Word>> got;
    for (const auto& x : all) got.push_back(x.factors);
    for (const auto& want : {Ls({"a", "b", "c", "d"}), Ls({"ab", "cd"}), Ls({"a", "bcd"})})
        CHECK(std::find(got.begin(), got.end(), want) != got.end());

    const auto galois = builtin_family("galois", Alphabet::binary());
    got.clear();
    for (const auto& x : all_factorizations(galois, L("ababab"))) got.push_back(x.factors);
    CHECK(std::find(got.begin(), got.end(), Ls({"ab", "ab", "ab"})) != got.end());
    CHECK(std::find(got.begin(), got.end(), Ls({"ababa", "b"})) != got.end());

    const auto ab = FactorFamily::extensional(Alphabet::binary(), Ls({"a", "b"}));
    CHECK(all_factorizations(ab, L("ab")).size() == 1);
}

TEST_CASE("unique maximal factorization oracle") {
    const auto r = unique_maximal_check(builtin_family("lyndon", Alphabet::digits()), D("33132421"));
    CHECK(r.unique);
    CHECK(r.maximal.front().factors == Ds({"3", "3", "13242", "1"}));
    const auto v = unique_maximal_check(builtin_family("vword", Alphabet::digits()), D("33132421"));
    CHECK(v.unique);
    CHECK(v.maximal.front().factors == Ds({"33132", "421"}));
    CHECK(v.factorizations > 1);
}

TEST_CASE("minimal rotation oracle") {
    CHECK(min_rotation_oracle(Order(OrderSpec::parse("vorder"), 10), D("26262636")) == D("62626263"));
    CHECK(min_rotation_oracle(Order(OrderSpec::parse("lex"), 2), L("ba")) == L("ab"));
    CHECK(min_rotation_oracle(Order(OrderSpec::parse("alt"), 2), L("aabbab")) == L("abaabb"));
    CHECK_THROWS_AS(min_rotation_oracle(Order(OrderSpec::parse("lex"), 2), L("abab")), Error);
}

TEST_CASE("star tree") {
    CHECK(star_path(D("922911")) == Ds({"922911", "92291", "9229", "929", "99", "9", ""}));
    CHECK(star_tree_cmp(D("929"), D("922911")) == Comparison::Less);
    const Alphabet a = Alphabet::from_chars("aeinqtu");
    CHECK(star_tree_cmp(a.encode("unique"), a.encode("equitant")) == Comparison::Greater);
    CHECK(star_tree_cmp(D("77"), D("77")) == Comparison::Equal);
}
