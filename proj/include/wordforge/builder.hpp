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
// Enlarging a finite binary border-free UMFF into a finite circ-UMFF.
//
// The construction scans every binary word up to the length cap in
// generation order and, for each primitive conjugacy class not yet
// represented, accepts one member: the input's own member of the class if
// it has one, else a word the xyz closure already forces, else the first
// concatenation of two accepted members that lands in the class and keeps
// the family border-free, one-per-class and xyz-consistent. The pair search
// tries (s, K-1-s) first and then every ordered pair with s != t. The
// result is verified before it is returned.

#ifndef WORDFORGE_BUILDER_HPP
#define WORDFORGE_BUILDER_HPP

#include <string_view>
#include <vector>

#include "wordforge/family.hpp"
#include "wordforge/word.hpp"

namespace wordforge {

constexpr std::size_t kDefaultBuilderCap = 20;

/* All binary words of length 1..max_len, each length block built by
 * prefixing a then b to the previous block. 2^(max_len+1) - 2 words. */
std::vector<Word> create_sigma_star(std::size_t max_len, std::size_t cap = kDefaultBuilderCap);

enum class Origin { Letter, Seed, Input, Forced, Synthesized };
std::string_view origin_name(Origin o) noexcept;

struct BuiltMember {
    Word word;
    Origin origin = Origin::Letter;
    // Acceptance indices of the concatenated pair, for Synthesized.
    std::size_t s = 0, t = 0;
};

struct BuildResult {
    FactorFamily family;
    std::vector<BuiltMember> members;  // acceptance order
    FamilyVerdict verdict;
};

/* Throws NotBinary, NotFF, NotBorderFree, NotUMFF (input or, should it ever
 * happen, output), NoAdmissibleConjugate, CapExceeded or Precondition
 * (fewer than three input members, or an intensional input). */
BuildResult build_circ_umff(const FactorFamily& input, std::size_t length_cap, std::size_t cap = kDefaultBuilderCap);

}  // namespace wordforge

#endif  // WORDFORGE_BUILDER_HPP
