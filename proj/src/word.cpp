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

#include "wordforge/word.hpp"

#include <algorithm>
#include <set>

namespace wordforge {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyWord: return "EmptyWord";
        case ErrorKind::NonPrimitive: return "NonPrimitive";
        case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
        case ErrorKind::Precondition: return "Precondition";
        case ErrorKind::NotFF: return "NotFF";
        case ErrorKind::NotUMFF: return "NotUMFF";
        case ErrorKind::NotBorderFree: return "NotBorderFree";
        case ErrorKind::NotBinary: return "NotBinary";
        case ErrorKind::NotGalois: return "NotGalois";
        case ErrorKind::NonPrimitiveConcat: return "NonPrimitiveConcat";
        case ErrorKind::NotMember: return "NotMember";
        case ErrorKind::NoAdmissibleConjugate: return "NoAdmissibleConjugate";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::Sentinel: return "Sentinel";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

namespace {

void require_non_empty(WordView w, const char* op) {
    if (w.empty()) throw Error(ErrorKind::EmptyWord, std::string(op) + ": empty word");
}

}  // namespace

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> glyphs) : glyphs_(std::move(glyphs)) {
    if (glyphs_.empty()) throw Error(ErrorKind::Precondition, "alphabet must be non-empty");
    std::set<std::string> seen;
    for (const auto& g : glyphs_) {
        if (g.empty()) throw Error(ErrorKind::Precondition, "alphabet glyphs must be non-empty");
        if (!seen.insert(g).second)
            throw Error(ErrorKind::Precondition, "duplicate alphabet glyph '" + g + "'");
        if (g.size() != 1) single_char_ = false;
    }
}

Alphabet Alphabet::from_chars(std::string_view chars) {
    std::vector<std::string> glyphs;
    for (char c : chars) glyphs.emplace_back(1, c);
    return Alphabet(std::move(glyphs));
}

Alphabet Alphabet::integers(std::vector<long long> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::string> glyphs;
    for (long long v : values) glyphs.push_back(std::to_string(v));
    return Alphabet(std::move(glyphs));
}

Alphabet Alphabet::infer(std::span<const std::string> texts) {
    std::set<unsigned char> chars;
    for (const auto& t : texts)
        for (char c : t) chars.insert(static_cast<unsigned char>(c));
    if (chars.empty()) return from_chars("a");
    std::string ordered(chars.begin(), chars.end());
    return from_chars(ordered);
}

Alphabet Alphabet::parse(std::string_view spec) {
    if (spec.find_first_of(", \t") != std::string_view::npos) {
        std::vector<std::string> glyphs;
        std::string cur;
        for (char c : spec) {
            if (c == ',' || c == ' ' || c == '\t') {
                if (!cur.empty()) glyphs.push_back(std::move(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) glyphs.push_back(std::move(cur));
        return Alphabet(std::move(glyphs));
    }
    if (spec.size() == 3 && spec[1] == '-' && spec[0] < spec[2]) {
        std::string chars;
        for (char c = spec[0]; c <= spec[2]; ++c) chars += c;
        return from_chars(chars);
    }
    if (spec.empty()) throw Error(ErrorKind::Parse, "empty alphabet");
    return from_chars(spec);
}

bool Alphabet::contains(WordView w) const noexcept {
    return std::all_of(w.begin(), w.end(), [&](Symbol s) { return s < glyphs_.size(); });
}

void Alphabet::require(WordView w) const {
    if (!contains(w))
        throw Error(ErrorKind::AlphabetMismatch, "word has a symbol outside the alphabet");
}

Word Alphabet::encode(std::string_view text, bool separated) const {
    auto lookup = [&](std::string_view g) -> Symbol {
        for (std::size_t i = 0; i < glyphs_.size(); ++i)
            if (glyphs_[i] == g) return static_cast<Symbol>(i);
        throw Error(ErrorKind::AlphabetMismatch, "symbol '" + std::string(g) + "' is not in the alphabet");
    };
    Word w;
    if (!separated) {
        for (char c : text) w.push_back(lookup(std::string_view(&c, 1)));
        return w;
    }
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n'; };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        if (j > i) w.push_back(lookup(text.substr(i, j - i)));
        i = j;
    }
    return w;
}

std::string Alphabet::decode(WordView w, std::string_view separator) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= glyphs_.size())
            throw Error(ErrorKind::AlphabetMismatch, "symbol outside the alphabet");
        if (i > 0) out += separator;
        out += glyphs_[w[i]];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elementary operations

Word VForm::join() const {
    Word w;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) w.push_back(max_letter);
        w.insert(w.end(), parts[i].begin(), parts[i].end());
    }
    return w;
}

Word rotate(WordView w, std::size_t i) {
    Word r;
    r.reserve(w.size());
    if (w.empty()) return r;
    i %= w.size();
    r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    return r;
}

std::vector<Word> rotations(WordView w) {
    if (w.empty()) return {Word{}};
    std::vector<Word> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(rotate(w, i));
    return out;
}

std::vector<std::size_t> failure_function(WordView w) {
    std::vector<std::size_t> fail(w.size() + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = fail[k];
        if (w[i] == w[k]) ++k;
        fail[i + 1] = k;
    }
    return fail;
}

std::size_t smallest_period(WordView w) {
    require_non_empty(w, "smallest_period");
    return w.size() - failure_function(w).back();
}

bool is_primitive(WordView w) {
    require_non_empty(w, "is_primitive");
    std::size_t p = smallest_period(w);
    return p == w.size() || w.size() % p != 0;
}

std::vector<Word> borders(WordView w) {
    require_non_empty(w, "borders");
    auto fail = failure_function(w);
    std::vector<Word> out;
    for (std::size_t k = fail.back(); k > 0; k = fail[k]) out.emplace_back(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    std::reverse(out.begin(), out.end());
    return out;
}

bool is_border_free(WordView w) {
    require_non_empty(w, "is_border_free");
    return failure_function(w).back() == 0;
}

VForm v_form(WordView w) {
    require_non_empty(w, "v_form");
    VForm f;
    f.max_letter = *std::max_element(w.begin(), w.end());
    f.parts.emplace_back();
    for (Symbol s : w) {
        if (s == f.max_letter) {
            ++f.count;
            f.parts.emplace_back();
        } else {
            f.parts.back().push_back(s);
        }
    }
    return f;
}

std::size_t star_position(WordView w) {
    require_non_empty(w, "star_delete");
    // Start of the longest non-decreasing suffix.
    std::size_t h = w.size() - 1;
    while (h > 0 && w[h - 1] <= w[h]) --h;
    return h;
}

Word star_delete(WordView w) {
    std::size_t h = star_position(w);
    Word out(w.begin(), w.end());
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(h));
    return out;
}

std::vector<Word> v_units(WordView w) {
    VForm f = v_form(w);
    if (!f.parts.front().empty())
        throw Error(ErrorKind::Precondition, "V-form units require the word to start with its maximal letter");
    std::vector<Word> units;
    for (std::size_t i = 1; i < f.parts.size(); ++i) {
        Word u{f.max_letter};
        u.insert(u.end(), f.parts[i].begin(), f.parts[i].end());
        units.push_back(std::move(u));
    }
    return units;
}

std::vector<Word> substring_conjugates(WordView w) {
    auto units = v_units(w);
    std::vector<Word> out;
    const std::size_t j = units.size();
    for (std::size_t t = 1; t <= j; ++t) {
        Word r;
        for (std::size_t i = 0; i < j; ++i) {
            const Word& u = units[(t + i) % j];
            r.insert(r.end(), u.begin(), u.end());
        }
        out.push_back(std::move(r));
    }
    return out;
}

bool is_subsequence(WordView needle, WordView hay) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < hay.size() && i < needle.size(); ++j)
        if (hay[j] == needle[i]) ++i;
    return i == needle.size();
}

bool is_prefix(WordView p, WordView w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

Word concat(WordView u, WordView v) {
    Word w(u.begin(), u.end());
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

}  // namespace wordforge
