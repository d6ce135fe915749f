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
// Burrows-Wheeler transform with a sentinel, its inverse, and the
// alternating variant on primitive words.

#ifndef WORDFORGE_TRANSFORMS_HPP
#define WORDFORGE_TRANSFORMS_HPP

#include "wordforge/word.hpp"

namespace wordforge {

// Sentinel words live over an extended alphabet: symbol 0 is the sentinel
// and body symbol s is stored as s + 1.
constexpr Symbol kSentinel = 0;

class SentinelWord {
public:
    static SentinelWord from_body(WordView body);
    // Exactly one sentinel, in last position; throws Sentinel otherwise.
    static SentinelWord from_extended(WordView ext);

    const Word& body() const noexcept { return body_; }
    Word extended() const;
    std::size_t size() const noexcept { return body_.size() + 1; }

private:
    Word body_;
};

// "$" followed by the glyphs of `body`; throws Sentinel if "$" is taken.
Alphabet sentinel_alphabet(const Alphabet& body);

// Last column of the lexicographically sorted rotations (extended symbols).
Word bwt(const SentinelWord& s);

struct BwtResult {
    Word last;
    std::size_t index = 0;  // row holding the input itself
};
BwtResult bwt_indexed(const SentinelWord& s);
// LF walk; throws Sentinel unless t has exactly one sentinel and is a BWT.
SentinelWord bwt_inverse(WordView t);

struct AbwtResult {
    Word last;
    std::size_t index = 0;  // row of the input word
};
// Rotations sorted in alternating lexorder; throws NonPrimitive.
AbwtResult abwt(WordView w);
// The sorted rotation matrix itself.
std::vector<Word> abwt_matrix(WordView w);

}  // namespace wordforge

#endif  // WORDFORGE_TRANSFORMS_HPP
