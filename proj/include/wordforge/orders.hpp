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
// Total orders on words behind a single comparator contract.
//
// Every order here is a strict total order on all words over a fixed
// alphabet, with the empty word as unique minimum, and compares Equal only
// on identical symbol sequences.

#ifndef WORDFORGE_ORDERS_HPP
#define WORDFORGE_ORDERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "wordforge/word.hpp"

namespace wordforge {

enum class Comparison : std::int8_t { Less = -1, Equal = 0, Greater = 1 };

constexpr Comparison flip(Comparison c) noexcept { return static_cast<Comparison>(-static_cast<int>(c)); }
// "LT", "EQ" or "GT".
const char* to_string(Comparison c) noexcept;

enum class OrderKind { Lex, Colex, Relex, Alt, Modalt, VOrder, LexExt };

class OrderSpec {
public:
    // Any kind except LexExt.
    static OrderSpec of(OrderKind kind);
    static OrderSpec lexext(OrderKind inner);
    // lex, colex, relex, alt, modalt, vorder, lexext:<inner>
    static OrderSpec parse(std::string_view name);

    OrderKind kind() const noexcept { return kind_; }
    std::optional<OrderKind> inner() const noexcept { return inner_; }
    std::string name() const;

    bool operator==(const OrderSpec&) const = default;

private:
    OrderSpec(OrderKind kind, std::optional<OrderKind> inner) : kind_(kind), inner_(inner) {}

    OrderKind kind_;
    std::optional<OrderKind> inner_;
};

std::string_view order_kind_name(OrderKind kind) noexcept;

Comparison cmp_lex(WordView x, WordView y) noexcept;
// Lexorder of the reversed words.
Comparison cmp_colex(WordView x, WordView y) noexcept;
// Lexorder under the reversed symbol order; a proper prefix still precedes.
Comparison cmp_relex(WordView x, WordView y) noexcept;

/* Alternating lexorder. At the first mismatch (1-based position i) the
 * smaller symbol wins when i is odd and the larger wins when i is even. A
 * proper prefix precedes exactly when its length is even. */
Comparison cmp_alt(WordView x, WordView y) noexcept;

/* Modified alternating lexorder. Identical to cmp_alt unless one word is a
 * proper prefix of the other. For y = x·y', x precedes y iff some extension
 * x·z differs from y inside y' and is alt-smaller than y: that is, iff some
 * position j of y' can be undercut (|x|+j odd, a smaller symbol exists) or
 * overshot (|x|+j even, a larger symbol exists). This depends on the
 * alphabet, hence `alphabet_size`. */
Comparison cmp_modalt(WordView x, WordView y, std::size_t alphabet_size) noexcept;

/* V-order via V-form recursion: compare maximal letters, then their counts,
 * then the first differing V-form parts recursively. */
Comparison cmp_v(WordView x, WordView y) noexcept;

/* Lex-extension order. Both words are cut into V-form units (a non-empty
 * x_0 first, then L·x_1, ..., L·x_k) and the unit sequences are compared
 * left to right under `inner`; a proper prefix sequence precedes. */
Comparison cmp_lexext(OrderKind inner, WordView x, WordView y, std::size_t alphabet_size);

// Lex-extension units of a word, as used by cmp_lexext.
std::vector<Word> lexext_units(WordView w);

// A comparator bound to an alphabet size (modalt needs it).
class Order {
public:
    Order(OrderSpec spec, std::size_t alphabet_size);

    Comparison compare(WordView x, WordView y) const;
    bool less(WordView x, WordView y) const { return compare(x, y) == Comparison::Less; }

    const OrderSpec& spec() const noexcept { return spec_; }
    std::size_t alphabet_size() const noexcept { return alphabet_size_; }

private:
    OrderSpec spec_;
    std::size_t alphabet_size_;
};

// Validates both words against the alphabet first.
Comparison cmp(const OrderSpec& order, WordView x, WordView y, const Alphabet& alphabet);

}  // namespace wordforge

#endif  // WORDFORGE_ORDERS_HPP
