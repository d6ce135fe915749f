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
#include "wordforge/oracle.hpp"
#include "wordforge/orders.hpp"

using namespace wordforge;
using namespace wordforge::testing;

namespace {

constexpr auto LT = Comparison::Less;
constexpr auto EQ = Comparison::Equal;
constexpr auto GT = Comparison::Greater;

}  // namespace

TEST_CASE("order names round-trip") {
    for (const char* name : {"lex", "colex", "relex", "alt", "modalt", "vorder", "lexext:colex", "lexext:modalt"})
        CHECK(OrderSpec::parse(name).name() == name);
    CHECK(OrderSpec::parse("lexext:alt").inner() == OrderKind::Alt);
    CHECK_THROWS_AS(OrderSpec::parse("lexext:lexext:lex"), Error);
    CHECK_THROWS_AS(OrderSpec::parse("lexext"), Error);
    CHECK_THROWS_AS(OrderSpec::parse("shortlex"), Error);
}

TEST_CASE("lex, colex and relex") {
    CHECK(cmp_lex(D("1231774"), D("7741231")) == LT);
    CHECK(cmp_lex(L("ab"), L("abb")) == LT);
    CHECK(cmp_lex(L("abc"), L("abc")) == EQ);
    CHECK(cmp_colex(D("321"), D("54")) == LT);
    CHECK(cmp_colex(D("7741231"), D("1231774")) == LT);
    CHECK(cmp_colex(L("ba"), L("ca")) == LT);
    for (const Word& w : rotations(D("3177412")))
        if (w != D("7741231")) CHECK(cmp_relex(D("7741231"), w) == LT);
}

TEST_CASE("alternating lexorder") {
    CHECK(cmp_alt(D("1774123"), D("1231774")) == LT);
    CHECK(cmp_alt(L("ab"), L("abb")) == LT);
    CHECK(cmp_alt(L("ab"), L("aba")) == LT);
    CHECK(cmp_alt(L("aba"), L("ab")) == GT);
    // Odd proper prefix follows its extensions.
    CHECK(cmp_alt(L("a"), L("ab")) == GT);
    CHECK(cmp_alt(L("ababa"), L("abaab")) == LT);
}

TEST_CASE("modified alternating lexorder") {
    CHECK(cmp_modalt(L("abbb"), L("abbabbbbb"), 2) == LT);
    CHECK(cmp_modalt(L("ab"), L("ab"), 2) == EQ);
    CHECK(cmp_modalt(L("a"), L("ab"), 2) == GT);
    CHECK(modalt_brute(L("a"), L("ab"), 2) == GT);
}

TEST_CASE("V-order") {
    CHECK(cmp_v(D("929"), D("922911")) == LT);
    const Alphabet a = Alphabet::from_chars("aeinqtu");
    CHECK(cmp_v(a.encode("equitant"), a.encode("unique")) == LT);
    CHECK(cmp_v(a.encode("unique"), a.encode("equitant")) == GT);
    CHECK(cmp_v(D("6263"), D("6362")) == LT);
    CHECK(cmp_v(D("6362"), D("2636")) == LT);
    CHECK(cmp_v(D("2636"), D("3626")) == LT);
    CHECK(cmp_v(D("772"), D("7547223")) == LT);
}

TEST_CASE("V-order suffixes of 7547223 increase with length") {
    const Word w = D("7547223");
    for (std::size_t i = 1; i < w.size(); ++i) {
        const WordView longer = WordView(w).subspan(i - 1), shorter = WordView(w).subspan(i);
        CHECK(cmp_v(shorter, longer) == LT);
    }
}

TEST_CASE("lex-extension") {
    CHECK(lexext_units(D("431412")) == Ds({"431", "412"}));
    CHECK(lexext_units(D("3431")) == Ds({"3", "431"}));
    CHECK(cmp_lexext(OrderKind::Colex, D("431412"), D("412431"), 10) == LT);
    CHECK(cmp_lexext(OrderKind::Lex, D("431412"), D("431412"), 10) == EQ);
    // A proper prefix of the unit sequence precedes.
    CHECK(cmp_lexext(OrderKind::Lex, D("43"), D("4341"), 10) == LT);
}

TEST_CASE("Order dispatches on the spec") {
    const Alphabet digits = Alphabet::digits();
    CHECK(cmp(OrderSpec::parse("colex"), D("321"), D("54"), digits) == LT);
    CHECK(cmp(OrderSpec::parse("vorder"), D("929"), D("922911"), digits) == LT);
    CHECK(Order(OrderSpec::parse("alt"), 10).less(D("1774123"), D("1231774")));
    CHECK(flip(LT) == GT);
    CHECK(std::string(to_string(EQ)) == "EQ");
}

TEST_CASE("V-order agrees with the star tree") {
    for (std::size_t sigma : {2u, 3u})
        for (const Word& x : enumerate_words(sigma, 5))
            for (const Word& y : enumerate_words(sigma, 5)) {
                CAPTURE(letters(x));
                CAPTURE(letters(y));
                REQUIRE(cmp_v(x, y) == star_tree_cmp(x, y));
            }
}

TEST_CASE("modalt closed form agrees with the extension search") {
    for (const Word& x : enumerate_words(2, 5))
        for (const Word& y : enumerate_words(2, 5)) {
            CAPTURE(letters(x));
            CAPTURE(letters(y));
            REQUIRE(cmp_modalt(x, y, 2) == modalt_brute(x, y, 2));
        }
}

TEST_CASE("every order is antisymmetric and transitive on short words") {
    for (const char* name : {"lex", "colex", "relex", "alt", "modalt", "vorder", "lexext:lex"}) {
        CAPTURE(name);
        const Order order(OrderSpec::parse(name), 2);
        auto words = enumerate_words(2, 4);
        if (OrderSpec::parse(name).kind() == OrderKind::LexExt) {
            std::erase_if(words, [](const Word& w) { return w.empty(); });
        } else {
            words.insert(words.begin(), Word{});
        }
        for (const Word& x : words)
            for (const Word& y : words) {
                const Comparison c = order.compare(x, y);
                REQUIRE(c == flip(order.compare(y, x)));
                REQUIRE((c == EQ) == (x == y));
                if (c != LT) continue;
                for (const Word& z : words)
                    if (order.less(y, z)) REQUIRE(order.less(x, z));
            }
    }
}
