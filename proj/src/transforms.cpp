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

#include "wordforge/transforms.hpp"

#include <algorithm>
#include <numeric>

#include "wordforge/orders.hpp"

namespace wordforge {

SentinelWord SentinelWord::from_body(WordView body) {
    SentinelWord s;
    s.body_.assign(body.begin(), body.end());
    return s;
}

SentinelWord SentinelWord::from_extended(WordView ext) {
    if (ext.empty() || ext.back() != kSentinel)
        throw Error(ErrorKind::Sentinel, "sentinel word must end with the sentinel");
    if (std::count(ext.begin(), ext.end(), kSentinel) != 1)
        throw Error(ErrorKind::Sentinel, "sentinel must occur exactly once");
    SentinelWord s;
    for (std::size_t i = 0; i + 1 < ext.size(); ++i) s.body_.push_back(ext[i] - 1);
    return s;
}

Word SentinelWord::extended() const {
    Word w;
    w.reserve(size());
    for (Symbol c : body_) w.push_back(c + 1);
    w.push_back(kSentinel);
    return w;
}

Alphabet sentinel_alphabet(const Alphabet& body) {
    std::vector<std::string> glyphs{"$"};
    for (const auto& g : body.glyphs()) {
        if (g == "$") throw Error(ErrorKind::Sentinel, "'$' is reserved for the sentinel");
        glyphs.push_back(g);
    }
    return Alphabet(std::move(glyphs));
}

namespace {

std::vector<std::size_t> sorted_rotations(const Word& w, bool alternating) {
    const std::size_t n = w.size();
    std::vector<Word> rots = rotations(w);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return (alternating ? cmp_alt(rots[a], rots[b]) : cmp_lex(rots[a], rots[b])) == Comparison::Less;
    });
    return idx;
}

}  // namespace

BwtResult bwt_indexed(const SentinelWord& s) {
    const Word w = s.extended();
    const std::size_t n = w.size();
    BwtResult r;
    r.last.reserve(n);
    const auto order = sorted_rotations(w, false);
    for (std::size_t row = 0; row < n; ++row) {
        r.last.push_back(w[(order[row] + n - 1) % n]);
        if (order[row] == 0) r.index = row;
    }
    return r;
}

Word bwt(const SentinelWord& s) { return bwt_indexed(s).last; }

SentinelWord bwt_inverse(WordView t) {
    if (std::count(t.begin(), t.end(), kSentinel) != 1)
        throw Error(ErrorKind::Sentinel, "transform must contain exactly one sentinel");
    const std::size_t n = t.size();
    // LF mapping: rank of each row's last symbol among equal symbols, offset
    // by the number of smaller symbols.
    const Symbol top = *std::max_element(t.begin(), t.end());
    std::vector<std::size_t> count(static_cast<std::size_t>(top) + 2, 0);
    for (Symbol c : t) ++count[c + 1];
    for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
    std::vector<std::size_t> lf(n);
    for (std::size_t i = 0; i < n; ++i) lf[i] = count[t[i]]++;

    Word ext(n, kSentinel);
    std::size_t row = 0;  // the rotation starting with the sentinel
    for (std::size_t k = n - 1; k-- > 0;) {
        if (t[row] == kSentinel) throw Error(ErrorKind::Sentinel, "input is not a Burrows-Wheeler transform");
        ext[k] = t[row];
        row = lf[row];
    }
    // The row starting with the first body symbol must end with the sentinel.
    if (t[row] != kSentinel) throw Error(ErrorKind::Sentinel, "input is not a Burrows-Wheeler transform");
    return SentinelWord::from_extended(ext);
}

std::vector<Word> abwt_matrix(WordView w) {
    if (w.empty()) throw Error(ErrorKind::EmptyWord, "abwt: empty word");
    if (!is_primitive(w)) throw Error(ErrorKind::NonPrimitive, "abwt requires a primitive word");
    const Word word(w.begin(), w.end());
    std::vector<Word> rows;
    for (std::size_t i : sorted_rotations(word, true)) rows.push_back(rotate(word, i));
    return rows;
}

AbwtResult abwt(WordView w) {
    if (w.empty()) throw Error(ErrorKind::EmptyWord, "abwt: empty word");
    if (!is_primitive(w)) throw Error(ErrorKind::NonPrimitive, "abwt requires a primitive word");
    const Word word(w.begin(), w.end());
    const std::size_t n = word.size();
    AbwtResult r;
    const auto order = sorted_rotations(word, true);
    for (std::size_t row = 0; row < n; ++row) {
        r.last.push_back(word[(order[row] + n - 1) % n]);
        if (order[row] == 0) r.index = row;
    }
    return r;
}

}  // namespace wordforge
