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
// Brute-force references. Deliberately naive; everything faster in the
// library is tested against these.

#ifndef WORDFORGE_ORACLE_HPP
#define WORDFORGE_ORACLE_HPP

#include <vector>

#include "wordforge/canonical.hpp"
#include "wordforge/family.hpp"
#include "wordforge/orders.hpp"
#include "wordforge/word.hpp"

namespace wordforge {

// Longest word length exhaustive routines accept: WORDFORGE_MAX_LEN if set,
// else 20.
std::size_t exhaustive_cap();

// Number of words of length 1..max_len over sigma letters. Throws
// CapExceeded beyond exhaustive_cap() or on overflow.
std::size_t word_count(std::size_t sigma, std::size_t max_len);

/* Word with the given rank in length-lex order (rank 0 is the first letter).
 * Ranks of length-n words are contiguous, so sweeps can be split by index. */
Word word_at(std::size_t sigma, std::size_t rank);

std::vector<Word> enumerate_words(std::size_t sigma, std::size_t max_len);
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len);
// Words of exactly `len` letters, lex order.
std::vector<Word> enumerate_length(std::size_t sigma, std::size_t len);

// Every factorization of w into members, depth-first from the left.
std::vector<Factorization> all_factorizations(const FactorFamily& f, WordView w);

struct UniqueMaximalResult {
    bool unique = false;
    std::size_t factorizations = 0;
    // Factorizations where no factor extends to a longer member occurrence.
    std::vector<Factorization> maximal;
};
UniqueMaximalResult unique_maximal_check(const FactorFamily& f, WordView w);

// Unit-level analogues for substring families (w starts with its max letter).
std::vector<Factorization> all_unit_factorizations(const FactorFamily::Predicate& member, WordView w);
UniqueMaximalResult unit_unique_maximal_check(const FactorFamily::Predicate& member, WordView w);

// Literal scan of all rotations; throws NonPrimitive.
Word min_rotation_oracle(const Order& order, WordView w);

// w, w*, w**, ..., down to the empty word.
std::vector<Word> star_path(WordView w);

/* Star-tree comparison: a word on the other's star path precedes it;
 * otherwise locate the first common ancestor and compare the two children
 * just below it at the greatest index where they differ. */
Comparison star_tree_cmp(WordView x, WordView y);

/* Modified alternating lexorder by search: for y = x y', x precedes iff
 * some x z with |z| <= |y'| differs from y and is alt-smaller than y. Non
 * prefix pairs fall back to alternating lexorder. */
Comparison modalt_brute(WordView x, WordView y, std::size_t sigma);

}  // namespace wordforge

#endif  // WORDFORGE_ORACLE_HPP
