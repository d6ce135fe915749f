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
// Alphabets, words and the elementary operations on them.

#ifndef WORDFORGE_WORD_HPP
#define WORDFORGE_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordforge {

/* A symbol is the position of a letter inside its alphabet, so the natural
 * integer order on symbols is the alphabet order. */
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

enum class ErrorKind {
    EmptyWord,
    NonPrimitive,
    AlphabetMismatch,
    Precondition,
    NotFF,
    NotUMFF,
    NotBorderFree,
    NotBinary,
    NotGalois,
    NonPrimitiveConcat,
    NotMember,
    NoAdmissibleConjugate,
    CapExceeded,
    Sentinel,
    Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/* Ordered list of distinct glyphs. Glyph i is encoded as symbol i.
 *
 * Multi-character glyphs (as produced by integer alphabets such as {10, 11})
 * are allowed; words over such alphabets are written with a separator. */
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> glyphs);

    static Alphabet from_chars(std::string_view chars);
    static Alphabet binary() { return from_chars("ab"); }
    // Digits 0..9, so that symbol value equals the digit.
    static Alphabet digits() { return from_chars("0123456789"); }
    // Integer alphabet; glyph order follows numeric order.
    static Alphabet integers(std::vector<long long> values);
    // Sorted union of the characters appearing in the given texts.
    static Alphabet infer(std::span<const std::string> texts);
    /* Spec strings: "abc" (one glyph per character), "a-e" (character
     * range), or glyphs separated by commas or blanks ("1,2,10"). */
    static Alphabet parse(std::string_view spec);

    std::size_t size() const noexcept { return glyphs_.size(); }
    const std::vector<std::string>& glyphs() const noexcept { return glyphs_; }
    bool single_char() const noexcept { return single_char_; }

    bool contains(WordView w) const noexcept;
    void require(WordView w) const;

    // Character-per-symbol text, or separator-delimited tokens when
    // `separated` is set.
    Word encode(std::string_view text, bool separated = false) const;
    std::string decode(WordView w, std::string_view separator = "") const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> glyphs_;
    bool single_char_ = true;
};

struct VForm {
    Symbol max_letter = 0;
    std::size_t count = 0;
    // x_0 .. x_count, any of which may be empty.
    std::vector<Word> parts;

    Word join() const;
};

std::vector<Word> rotations(WordView w);
Word rotate(WordView w, std::size_t i);

// Failure function: fail[i] = length of the longest proper border of w[0..i).
std::vector<std::size_t> failure_function(WordView w);
std::size_t smallest_period(WordView w);

bool is_primitive(WordView w);
// Non-empty proper borders, shortest first.
std::vector<Word> borders(WordView w);
bool is_border_free(WordView w);

VForm v_form(WordView w);
Word star_delete(WordView w);
std::size_t star_position(WordView w);

// Rotations by whole V-form units, R_1 .. R_j, with R_j = w.
std::vector<Word> substring_conjugates(WordView w);
// The units L·x_1, ..., L·x_j of a word whose V-form has x_0 empty.
std::vector<Word> v_units(WordView w);

bool is_subsequence(WordView needle, WordView hay);
bool is_prefix(WordView p, WordView w);

Word concat(WordView u, WordView v);

}  // namespace wordforge

#endif  // WORDFORGE_WORD_HPP
