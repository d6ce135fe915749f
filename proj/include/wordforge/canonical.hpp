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
// Canonical word classes: Lyndon words, V-words, Galois words and T-words
// for an arbitrary order, their factorizations, and constructions producing
// members of these classes.

#ifndef WORDFORGE_CANONICAL_HPP
#define WORDFORGE_CANONICAL_HPP

#include <map>
#include <string>
#include <vector>

#include "wordforge/orders.hpp"
#include "wordforge/word.hpp"

namespace wordforge {

enum class FactorKind { Lyndon, VWord, Family, AbGalois, Units };

struct Factorization {
    std::vector<Word> factors;
    FactorKind kind = FactorKind::Family;

    Word join() const;
    bool operator==(const Factorization& o) const { return factors == o.factors; }
};

std::string_view factor_kind_name(FactorKind kind) noexcept;

// ---------------------------------------------------------------------------
// Lyndon words

bool is_lyndon(WordView w);
// Duval's algorithm: Lyndon factors in non-increasing lexorder.
Factorization duval_factorization(WordView w);

// ---------------------------------------------------------------------------
// T-words for an arbitrary order

// Rotation index of the unique minimum; throws NonPrimitive otherwise.
std::size_t min_rotation_index(const Order& order, WordView w);
Word t_word_of_class(const Order& order, WordView w);
// False (not an error) for non-primitive words.
bool is_t_word(const Order& order, WordView w);

bool is_v_word(WordView w);
bool is_galois(WordView w);

// Greedy longest V-word prefix; the unique maximal V-word factorization.
Factorization v_factorization(WordView w);

/* For words L x_1 L x_2 ... L x_j with every |x_i| = 1, reports whether
 * x_1 x_2 ... x_j is Lyndon (which coincides with being a V-word). Throws
 * Precondition when the word does not have that shape. */
bool is_v_lyndon_form(WordView w);

/* L l[1]^h L l[2]^h ... L l[n]^h for a Lyndon word l and a letter L above
 * every letter of l. */
Word lyndon_to_v_words(WordView lyndon, Symbol max_letter, std::size_t h);

enum class ExtendMode { VWord, Lyndon };

/* Prepends k copies of a letter to a Lyndon word x, |x| >= 2: the letter
 * just above max(x) for VWord mode (must exist in the alphabet), or min(x)
 * for Lyndon mode. */
Word obs_lyn2v_extend(WordView x, std::size_t k, ExtendMode mode, std::size_t alphabet_size);

// ---------------------------------------------------------------------------
// Galois words

struct RotationResult {
    std::size_t index = 0;
    Word word;
};

// Quadratic scan for the alt-minimal rotation.
RotationResult galois_rotation(WordView w);

/* is_galois(uv) for Galois u, v with uv primitive. Throws NotGalois or
 * NonPrimitiveConcat when the premises fail. */
bool galois_concat_check(WordView u, WordView v);

/* Factors of shape a b^e a^f (e >= 1, f >= 0) over the binary alphabet
 * {a=0, b=1}; every factor's only occurrence of ab is its prefix. */
Factorization ab_galois_factorization(WordView w);

// Galois and border-free.
bool is_bbf_galois_direct(WordView w);
/* The ab-Galois factor sequence of a primitive binary word starting with ab
 * is strictly least among its cyclic rotations, comparing factor sequences
 * left to right with modified alternating lexorder on factors. */
bool is_bbf_galois_structural(WordView w);
bool is_bbf_galois(WordView w);

// ---------------------------------------------------------------------------
// Substring (V-form unit) words

/* A word L x_1 ... L x_j (x_0 empty) whose unit sequence is primitive,
 * border-free at unit level and strictly least among its substring
 * conjugates in lex-extension order over `inner`. */
bool is_t_lex_word(OrderKind inner, WordView w, std::size_t alphabet_size);

// ---------------------------------------------------------------------------
// Class reports

struct ClassReport {
    Word word;
    bool is_lyndon = false;
    bool is_v_word = false;
    bool is_galois = false;
    bool is_border_free = false;
    bool is_primitive = false;
    // Order name -> rotation index of the class minimum.
    std::map<std::string, std::size_t> min_rotation_index;
    std::map<std::string, Word> min_rotation;
};

/* Lexext orders minimise over substring conjugates when the word starts
 * with its maximal letter, over all rotations otherwise. Throws
 * NonPrimitive for non-primitive words. */
ClassReport class_report(WordView w, const std::vector<OrderSpec>& orders, std::size_t alphabet_size);

}  // namespace wordforge

#endif  // WORDFORGE_CANONICAL_HPP
