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

#include "wordforge/builder.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wordforge {

std::vector<Word> create_sigma_star(std::size_t max_len, std::size_t cap) {
    if (max_len == 0) throw Error(ErrorKind::Precondition, "maximum word length must be positive");
    if (max_len > cap)
        throw Error(ErrorKind::CapExceeded, "length " + std::to_string(max_len) + " exceeds the builder cap " +
                                                std::to_string(cap));
    std::vector<Word> out{{0}, {1}};
    std::size_t block_begin = 0, block_end = 2;
    for (std::size_t len = 2; len <= max_len; ++len) {
        for (Symbol first : {Symbol{0}, Symbol{1}})
            for (std::size_t i = block_begin; i < block_end; ++i) {
                Word w{first};
                w.insert(w.end(), out[i].begin(), out[i].end());
                out.push_back(std::move(w));
            }
        block_begin = block_end;
        block_end = out.size();
    }
    return out;
}

std::string_view origin_name(Origin o) noexcept {
    switch (o) {
        case Origin::Letter: return "letter";
        case Origin::Seed: return "seed";
        case Origin::Input: return "input";
        case Origin::Forced: return "forced";
        case Origin::Synthesized: return "synthesized";
    }
    return "?";
}

namespace {

Word class_key(WordView w) {
    auto rots = rotations(w);
    return *std::min_element(rots.begin(), rots.end());
}

class Builder {
public:
    Builder(std::vector<Word> input, std::size_t cap) : cap_(cap) {
        for (auto& w : input)
            if (w.size() <= cap_) input_keys_.emplace(class_key(w), w);
    }

    /* Records the words the xyz closure forces once c joins the family.
     * With `strict`, c must also be new and border-free, and nothing it
     * forces may clash with a class already settled; nothing is recorded
     * on a clash. */
    bool admit(const Word& c, bool strict) {
        if (strict && (!is_border_free(c) || accepted_.count(c))) return false;
        const Word ck = class_key(c);
        std::map<Word, Word> fresh;
        auto settle = [&](const Word& xyz) {
            Word k = class_key(xyz);
            if (k == ck) return xyz == c;
            const Word* have = lookup(k, fresh);
            if (have && *have != xyz) return false;
            if (auto it = input_keys_.find(k); it != input_keys_.end() && it->second != xyz) return false;
            fresh.emplace(std::move(k), xyz);
            return true;
        };
        std::vector<Word> pool(order_.begin(), order_.end());
        pool.push_back(c);
        for (const Word& m : pool) {
            for (const Word& xyz : overlaps(c, m))
                if (!settle(xyz)) return false;
            for (const Word& xyz : overlaps(m, c))
                if (!settle(xyz)) return false;
        }
        for (auto& [k, w] : fresh) forced_.emplace(k, w);
        return true;
    }

    void accept(BuiltMember m) {
        classes_.emplace(class_key(m.word), m.word);
        accepted_.insert(m.word);
        order_.push_back(m.word);
        members_.push_back(std::move(m));
    }

    bool has_class(const Word& k) const { return classes_.count(k) > 0; }
    const Word* input_member(const Word& k) const {
        auto it = input_keys_.find(k);
        return it == input_keys_.end() ? nullptr : &it->second;
    }
    const Word* forced(const Word& k) const {
        auto it = forced_.find(k);
        return it == forced_.end() ? nullptr : &it->second;
    }
    const std::vector<Word>& order() const { return order_; }
    std::vector<BuiltMember>& members() { return members_; }

private:
    // a·b[k..] for every overlap of a suffix of a with a prefix of b,
    // 0 < k < min(|a|, |b|), within the cap.
    std::vector<Word> overlaps(const Word& a, const Word& b) const {
        std::vector<Word> out;
        for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
            if (a.size() + b.size() - k > cap_) continue;
            if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) continue;
            Word w = a;
            w.insert(w.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
            out.push_back(std::move(w));
        }
        return out;
    }

    const Word* lookup(const Word& k, const std::map<Word, Word>& fresh) const {
        if (auto it = classes_.find(k); it != classes_.end()) return &it->second;
        if (auto it = forced_.find(k); it != forced_.end()) return &it->second;
        if (auto it = fresh.find(k); it != fresh.end()) return &it->second;
        return nullptr;
    }

    std::size_t cap_;
    std::map<Word, Word> input_keys_, classes_, forced_;
    std::set<Word> accepted_;
    std::vector<Word> order_;
    std::vector<BuiltMember> members_;
};

void validate_input(const FactorFamily& input, std::vector<Word>& words) {
    if (!input.is_extensional()) throw Error(ErrorKind::Precondition, "the input family must be finite");
    if (input.alphabet().size() != 2) throw Error(ErrorKind::NotBinary, "the input family must be binary");
    if (!input.is_ff()) throw Error(ErrorKind::NotFF, "the input family lacks a letter");
    words = input.members(*input.length_bound());
    if (words.size() <= 2) throw Error(ErrorKind::Precondition, "the input family needs more than two members");
    for (const auto& w : words)
        if (!is_border_free(w))
            throw Error(ErrorKind::NotBorderFree, "input member '" + input.alphabet().decode(w) + "' is bordered");
    // Closure is required only within the input's own lengths; longer
    // overlaps become forced members during the build.
    auto v = xyz_check(input, *input.length_bound(), 1);
    if (!v.umff_up_to_bound) {
        const auto& x = v.xyz_witnesses.front();
        throw Error(ErrorKind::NotUMFF, "input is not an UMFF: x=" + input.alphabet().decode(x.x) +
                                            " y=" + input.alphabet().decode(x.y) + " z=" + input.alphabet().decode(x.z));
    }
}

}  // namespace

BuildResult build_circ_umff(const FactorFamily& input, std::size_t length_cap, std::size_t cap) {
    std::vector<Word> words;
    validate_input(input, words);
    const auto universe = create_sigma_star(length_cap, cap);  // also enforces the cap
    std::stable_sort(words.begin(), words.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });

    Builder b(words, length_cap);
    b.accept({{0}, Origin::Letter});
    b.accept({{1}, Origin::Letter});
    // Bordered w3 is excluded above, so first and last letters differ.
    const Word& w3 = words[2];
    const Word seed = w3.size() == 2 ? w3 : Word{w3.front(), w3.back()};
    if (seed.size() <= length_cap) {
        b.admit(seed, false);
        b.accept({seed, Origin::Seed});
    }

    for (const Word& w : universe) {
        if (!is_primitive(w)) continue;
        const Word k = class_key(w);
        if (b.has_class(k)) continue;
        if (const Word* m = b.input_member(k)) {
            Word c = *m;
            b.admit(c, false);
            b.accept({std::move(c), Origin::Input});
            continue;
        }
        if (const Word* m = b.forced(k)) {
            Word c = *m;
            b.admit(c, false);
            b.accept({std::move(c), Origin::Forced});
            continue;
        }
        const auto& acc = b.order();
        const std::size_t n = acc.size();
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t s = 0; s < n; ++s) pairs.emplace_back(s, n - 1 - s);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t) pairs.emplace_back(s, t);
        bool found = false;
        for (auto [s, t] : pairs) {
            if (s == t || acc[s].size() + acc[t].size() != w.size()) continue;
            Word c = concat(acc[s], acc[t]);
            if (class_key(c) != k || !b.admit(c, true)) continue;
            b.accept({std::move(c), Origin::Synthesized, s, t});
            found = true;
            break;
        }
        if (!found)
            throw Error(ErrorKind::NoAdmissibleConjugate,
                        "no admissible member for the class of '" + input.alphabet().decode(w) + "'");
    }

    std::vector<Word> out_words;
    for (const auto& m : b.members()) out_words.push_back(m.word);
    auto family = FactorFamily::extensional(input.alphabet(), out_words, "circ-umff");
    auto verdict = circ_umff_verify(family, length_cap);
    for (const auto& w : words)
        if (w.size() <= length_cap && !family.contains(w))
            throw Error(ErrorKind::NotUMFF, "input member '" + input.alphabet().decode(w) + "' was not kept");
    for (const auto& w : out_words)
        if (!is_border_free(w)) throw Error(ErrorKind::NotBorderFree, "built member is bordered");
    if (!verdict.passed()) throw Error(ErrorKind::NotUMFF, "the built family failed verification");
    return {std::move(family), std::move(b.members()), std::move(verdict)};
}

}  // namespace wordforge
