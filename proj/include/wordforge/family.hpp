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
// Factorization families and their bounded UMFF / circ-UMFF verification.
//
// A family is either an explicit word set or a membership predicate. All
// verdicts are bounded: they quantify over words up to a stated length.

#ifndef WORDFORGE_FAMILY_HPP
#define WORDFORGE_FAMILY_HPP

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wordforge/canonical.hpp"
#include "wordforge/orders.hpp"
#include "wordforge/word.hpp"

namespace wordforge {

class FactorFamily {
public:
    using Predicate = std::function<bool(WordView)>;

    static FactorFamily extensional(Alphabet alphabet, std::vector<Word> members, std::string name = "explicit");
    static FactorFamily intensional(Alphabet alphabet, Predicate member, std::string name);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::string& name() const noexcept { return name_; }
    bool is_extensional() const noexcept { return !predicate_; }

    bool contains(WordView w) const;
    // Members of length <= bound in length-lex order. Intensional families
    // enumerate the alphabet, so the bound is subject to the exhaustive cap.
    std::vector<Word> members(std::size_t bound) const;
    // Longest member, for extensional families.
    std::optional<std::size_t> length_bound() const;
    // Single-letter words absent from the family.
    std::vector<Word> missing_letters() const;
    bool is_ff() const { return missing_letters().empty(); }

private:
    FactorFamily(Alphabet alphabet, std::string name) : alphabet_(std::move(alphabet)), name_(std::move(name)) {}

    Alphabet alphabet_;
    std::string name_;
    Predicate predicate_;
    std::set<Word> set_;
    std::map<std::size_t, std::vector<Word>> by_length_;
};

struct XyzWitness {
    Word x, y, z;
};

struct ClassWitness {
    Word key;                  // lex-least rotation
    std::vector<Word> members;  // family members in the class (0 or >= 2)
};

struct FamilyVerdict {
    std::size_t bound = 0;
    bool is_ff = false;
    bool umff_up_to_bound = false;
    // Unset when only the xyz half was checked.
    std::optional<bool> circ_umff_up_to_bound;
    std::vector<Word> missing_letters;
    std::vector<XyzWitness> xyz_witnesses;
    std::vector<ClassWitness> class_witnesses;

    bool passed() const { return is_ff && umff_up_to_bound && circ_umff_up_to_bound.value_or(true); }
};

/* For all members xy, yz (y non-empty, x and z non-empty) with |xyz| <= bound,
 * checks xyz is a member. Witnesses are capped at `max_witnesses`. Throws
 * NotFF for families missing a letter. */
FamilyVerdict xyz_check(const FactorFamily& f, std::size_t bound, std::size_t max_witnesses = 16);

/* Smallest superset of an explicit family closed under the xyz rule for
 * words up to `bound`. */
FactorFamily xyz_closure(const FactorFamily& f, std::size_t bound);

// Exactly one member per primitive class of length <= bound, plus xyz_check.
FamilyVerdict circ_umff_verify(const FactorFamily& f, std::size_t bound, std::size_t max_witnesses = 16);

/* The unique maximal factorization over a family already certified UMFF up
 * to `certified_bound`. Greedy longest member prefix, followed by a scan
 * confirming no factor extends to a longer member inside w. */
class MaximalFactorizer {
public:
    MaximalFactorizer(FactorFamily family, std::size_t certified_bound);
    // Runs xyz_check at `bound` and throws NotUMFF on failure.
    static MaximalFactorizer certify(FactorFamily family, std::size_t bound);

    Factorization operator()(WordView w) const;
    const FactorFamily& family() const noexcept { return family_; }

private:
    FactorFamily family_;
    std::size_t bound_;
};

/* Certifies the overlaps of member occurrences inside w (NotUMFF on a
 * violation) and factors w. Works for intensional families over large
 * alphabets, where certify() would have to enumerate every word. */
Factorization maximal_factorization(const FactorFamily& f, WordView w);

// Interval [begin, end) of w, as used for extendibility witnesses.
struct Interval {
    std::size_t begin = 0, end = 0;
};
// A strictly larger member occurrence covering some factor, if any.
std::optional<Interval> find_extension(const FactorFamily& f, WordView w, const Factorization& fz);

enum class WOrder { Less, GreaterOrUnordered };
WOrder w_order(const FactorFamily& f, WordView u, WordView v);

struct Misalignment {
    Word u, v;
    bool w_less = false;      // uv in family
    bool order_less = false;  // u precedes v in the order
};
std::vector<Misalignment> alignment_check(const FactorFamily& f, const OrderSpec& order, std::size_t bound);

// ---------------------------------------------------------------------------
// Unit-level (substring) families. Words are sequences of V-form units
// L x_i with x_0 empty.

struct SubstringDomain {
    Symbol max_letter = 0;       // L; parts use letters below it
    std::size_t max_units = 0;
    std::size_t max_part_len = 0;
};

struct SubstringVerdict {
    std::size_t classes = 0;
    std::vector<ClassWitness> class_witnesses;
    std::vector<XyzWitness> xyz_witnesses;
    bool passed() const { return class_witnesses.empty() && xyz_witnesses.empty(); }
};

// Every word of the domain (unit sequence order).
std::vector<Word> substring_domain_words(const SubstringDomain& d);

/* Exactly one member per primitive substring-rotation class in the domain,
 * and xyz closure at unit level (xy, yz members with non-empty unit
 * sequences x, y, z imply xyz is a member). */
SubstringVerdict substring_circ_verify(const FactorFamily::Predicate& member, const SubstringDomain& d,
                                       std::size_t max_witnesses = 16);

// Greedy longest-member prefix over V-form units; w must start with L.
Factorization unit_maximal_factorization(const FactorFamily::Predicate& member, WordView w);

// ---------------------------------------------------------------------------
// Builtins and files

/* lyndon, vword, galois, galois-bf, colyndon, or tword:<order> (border-free
 * minimal rotations under the order). */
FactorFamily builtin_family(const std::string& name, const Alphabet& alphabet);
std::vector<std::string> builtin_family_names();

/* Text format: a header line `alphabet <glyphs>` (characters, or
 * comma-separated tokens), then one word per line. `#` starts a comment. */
FactorFamily read_family(std::istream& in, const std::string& name = "file");
FactorFamily read_family_file(const std::string& path);
void write_family(std::ostream& out, const FactorFamily& f, std::size_t bound,
                  const std::map<Word, std::string>& comments = {});

}  // namespace wordforge

#endif  // WORDFORGE_FAMILY_HPP
