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

#include "wordforge/canonical.hpp"

#include <algorithm>

namespace wordforge {

namespace {

void require_non_empty(WordView w, const char* op) {
    if (w.empty()) throw Error(ErrorKind::EmptyWord, std::string(op) + ": empty word");
}

std::size_t natural_size(WordView w) {
    return w.empty() ? 1 : static_cast<std::size_t>(*std::max_element(w.begin(), w.end())) + 1;
}

void require_binary(WordView w) {
    if (std::any_of(w.begin(), w.end(), [](Symbol s) { return s > 1; }))
        throw Error(ErrorKind::NotBinary, "word is not over a binary alphabet");
}

// Rotation i of w compared against rotation j, without materialising either.
Comparison compare_rotations(const Order& order, WordView w, std::size_t i, std::size_t j, Word& a, Word& b) {
    const std::size_t n = w.size();
    a.resize(n);
    b.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        a[k] = w[(i + k) % n];
        b[k] = w[(j + k) % n];
    }
    return order.compare(a, b);
}

}  // namespace

Word Factorization::join() const {
    Word w;
    for (const auto& f : factors) w.insert(w.end(), f.begin(), f.end());
    return w;
}

std::string_view factor_kind_name(FactorKind kind) noexcept {
    switch (kind) {
        case FactorKind::Lyndon: return "lyndon";
        case FactorKind::VWord: return "vword";
        case FactorKind::Family: return "family";
        case FactorKind::AbGalois: return "abgalois";
        case FactorKind::Units: return "units";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Lyndon

Factorization duval_factorization(WordView w) {
    require_non_empty(w, "duval_factorization");
    Factorization f{{}, FactorKind::Lyndon};
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && w[k] <= w[j]) {
            k = w[k] < w[j] ? i : k + 1;
            ++j;
        }
        while (i <= k) {
            f.factors.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(i),
                                   w.begin() + static_cast<std::ptrdiff_t>(i + j - k));
            i += j - k;
        }
    }
    return f;
}

bool is_lyndon(WordView w) {
    require_non_empty(w, "is_lyndon");
    return duval_factorization(w).factors.size() == 1;
}

// ---------------------------------------------------------------------------
// T-words

std::size_t min_rotation_index(const Order& order, WordView w) {
    require_non_empty(w, "min_rotation_index");
    if (!is_primitive(w)) throw Error(ErrorKind::NonPrimitive, "class minimum requires a primitive word");
    Word a, b;
    std::size_t best = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (compare_rotations(order, w, i, best, a, b) == Comparison::Less) best = i;
    return best;
}

Word t_word_of_class(const Order& order, WordView w) { return rotate(w, min_rotation_index(order, w)); }

bool is_t_word(const Order& order, WordView w) {
    require_non_empty(w, "is_t_word");
    if (!is_primitive(w)) return false;
    return min_rotation_index(order, w) == 0;
}

bool is_v_word(WordView w) { return is_t_word(Order(OrderSpec::of(OrderKind::VOrder), natural_size(w)), w); }

bool is_galois(WordView w) { return is_t_word(Order(OrderSpec::of(OrderKind::Alt), natural_size(w)), w); }

Factorization v_factorization(WordView w) {
    require_non_empty(w, "v_factorization");
    Factorization f{{}, FactorKind::VWord};
    std::size_t i = 0;
    while (i < w.size()) {
        // A single letter is always a V-word, so the scan terminates.
        std::size_t len = w.size() - i;
        while (len > 1 && !is_v_word(w.subspan(i, len))) --len;
        f.factors.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(i),
                               w.begin() + static_cast<std::ptrdiff_t>(i + len));
        i += len;
    }
    return f;
}

bool is_v_lyndon_form(WordView w) {
    VForm f = v_form(w);
    if (!f.parts.front().empty())
        throw Error(ErrorKind::Precondition, "V-Lyndon form needs the word to start with its maximal letter");
    Word core;
    for (std::size_t i = 1; i < f.parts.size(); ++i) {
        if (f.parts[i].size() != 1)
            throw Error(ErrorKind::Precondition, "V-Lyndon form needs every part to be a single letter");
        core.push_back(f.parts[i][0]);
    }
    return is_lyndon(core);
}

Word lyndon_to_v_words(WordView lyndon, Symbol max_letter, std::size_t h) {
    if (h == 0) throw Error(ErrorKind::Precondition, "h must be positive");
    if (!is_lyndon(lyndon)) throw Error(ErrorKind::Precondition, "seed word is not Lyndon");
    if (*std::max_element(lyndon.begin(), lyndon.end()) >= max_letter)
        throw Error(ErrorKind::Precondition, "letter must exceed every letter of the seed");
    Word out;
    for (Symbol s : lyndon) {
        out.push_back(max_letter);
        out.insert(out.end(), h, s);
    }
    return out;
}

Word obs_lyn2v_extend(WordView x, std::size_t k, ExtendMode mode, std::size_t alphabet_size) {
    if (k == 0) throw Error(ErrorKind::Precondition, "k must be positive");
    if (x.size() < 2) throw Error(ErrorKind::Precondition, "extension needs |x| >= 2");
    if (!is_lyndon(x)) throw Error(ErrorKind::Precondition, "x is not Lyndon");
    Symbol letter;
    if (mode == ExtendMode::Lyndon) {
        letter = *std::min_element(x.begin(), x.end());
    } else {
        letter = *std::max_element(x.begin(), x.end()) + 1;
        if (letter >= alphabet_size)
            throw Error(ErrorKind::Precondition, "alphabet exhausted: no letter above max(x)");
    }
    Word out(k, letter);
    out.insert(out.end(), x.begin(), x.end());
    return out;
}

// ---------------------------------------------------------------------------
// Galois

RotationResult galois_rotation(WordView w) {
    Order alt(OrderSpec::of(OrderKind::Alt), natural_size(w));
    std::size_t i = min_rotation_index(alt, w);
    return {i, rotate(w, i)};
}

bool galois_concat_check(WordView u, WordView v) {
    if (!is_galois(u) || !is_galois(v)) throw Error(ErrorKind::NotGalois, "both operands must be Galois words");
    Word uv = concat(u, v);
    if (!is_primitive(uv)) throw Error(ErrorKind::NonPrimitiveConcat, "concatenation is not primitive");
    return is_galois(uv);
}

Factorization ab_galois_factorization(WordView w) {
    require_binary(w);
    if (w.size() < 2 || w[0] != 0 || w[1] != 1)
        throw Error(ErrorKind::Precondition, "ab-Galois factorization needs a word starting with ab");
    Factorization f{{}, FactorKind::AbGalois};
    std::size_t start = 0;
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        if (w[i] == 0 && w[i + 1] == 1) {
            f.factors.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(start), w.begin() + static_cast<std::ptrdiff_t>(i));
            start = i;
        }
    }
    f.factors.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(start), w.end());
    return f;
}

bool is_bbf_galois_direct(WordView w) {
    require_non_empty(w, "is_bbf_galois");
    require_binary(w);
    return is_galois(w) && is_border_free(w);
}

bool is_bbf_galois_structural(WordView w) {
    require_non_empty(w, "is_bbf_galois");
    require_binary(w);
    if (w.size() < 2 || w[0] != 0 || w[1] != 1 || !is_primitive(w)) return false;
    const auto units = ab_galois_factorization(w).factors;
    const std::size_t t = units.size();
    auto unit_cmp = [&](std::size_t r) {
        for (std::size_t i = 0; i < t; ++i) {
            const Word& a = units[i];
            const Word& b = units[(i + r) % t];
            if (a == b) continue;
            return cmp_modalt(a, b, 2);
        }
        return Comparison::Equal;
    };
    for (std::size_t r = 1; r < t; ++r)
        if (unit_cmp(r) != Comparison::Less) return false;
    return true;
}

bool is_bbf_galois(WordView w) { return is_bbf_galois_direct(w); }

// ---------------------------------------------------------------------------
// Substring words

bool is_t_lex_word(OrderKind inner, WordView w, std::size_t alphabet_size) {
    require_non_empty(w, "is_t_lex_word");
    if (!v_form(w).parts.front().empty()) return false;
    const auto units = v_units(w);
    const std::size_t j = units.size();
    // Unit-level border-freeness (which also rules out unit periodicity).
    for (std::size_t k = 1; k < j; ++k)
        if (std::equal(units.begin(), units.begin() + static_cast<std::ptrdiff_t>(k),
                       units.end() - static_cast<std::ptrdiff_t>(k)))
            return false;
    const auto conj = substring_conjugates(w);
    for (std::size_t t = 0; t + 1 < j; ++t)
        if (cmp_lexext(inner, w, conj[t], alphabet_size) != Comparison::Less) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Class reports

ClassReport class_report(WordView w, const std::vector<OrderSpec>& orders, std::size_t alphabet_size) {
    require_non_empty(w, "class_report");
    if (!is_primitive(w)) throw Error(ErrorKind::NonPrimitive, "class report requires a primitive word");
    ClassReport r;
    r.word.assign(w.begin(), w.end());
    r.is_primitive = true;
    r.is_lyndon = is_lyndon(w);
    r.is_v_word = is_v_word(w);
    r.is_galois = is_galois(w);
    r.is_border_free = is_border_free(w);
    const Symbol top = *std::max_element(w.begin(), w.end());
    for (const auto& spec : orders) {
        Order order(spec, alphabet_size);
        std::size_t best;
        if (spec.kind() == OrderKind::LexExt) {
            // Rotations starting with the maximal letter, i.e. the substring
            // conjugates of any one of them.
            Word a, b;
            best = w.size();
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w[i] != top) continue;
                if (best == w.size() || compare_rotations(order, w, i, best, a, b) == Comparison::Less) best = i;
            }
        } else {
            best = min_rotation_index(order, w);
        }
        r.min_rotation_index[spec.name()] = best;
        r.min_rotation[spec.name()] = rotate(w, best);
    }
    return r;
}

}  // namespace wordforge
