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

#include "wordforge/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>

namespace wordforge {

std::size_t exhaustive_cap() {
    if (const char* env = std::getenv("WORDFORGE_MAX_LEN")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 20;
}

namespace {

constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();

std::size_t checked_pow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > kMax / base) throw Error(ErrorKind::CapExceeded, "word count overflows");
        r *= base;
    }
    return r;
}

// member[i][j]: w[i, j) is a member, j > i.
using Table = std::vector<std::vector<char>>;

template <class Member>
Table membership_table(std::size_t n, Member&& member) {
    Table t(n + 1, std::vector<char>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) t[i][j] = member(i, j) ? 1 : 0;
    return t;
}

// Each factorization as its list of cut points 0 = c_0 < ... < c_k = n.
std::vector<std::vector<std::size_t>> all_cuts(const Table& t, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur{0};
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t j = pos + 1; j <= n; ++j) {
            if (!t[pos][j]) continue;
            cur.push_back(j);
            self(self, j);
            cur.pop_back();
        }
    };
    if (n > 0) rec(rec, 0);
    return out;
}

bool non_extendible(const Table& t, std::size_t n, const std::vector<std::size_t>& cuts) {
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const std::size_t p = cuts[k], q = cuts[k + 1];
        for (std::size_t a = 0; a <= p; ++a)
            for (std::size_t b = q; b <= n; ++b)
                if ((a != p || b != q) && t[a][b]) return false;
    }
    return true;
}

}  // namespace

std::size_t word_count(std::size_t sigma, std::size_t max_len) {
    if (sigma == 0) throw Error(ErrorKind::Precondition, "alphabet must be non-empty");
    if (max_len > exhaustive_cap())
        throw Error(ErrorKind::CapExceeded, "length " + std::to_string(max_len) + " exceeds the exhaustive cap " +
                                                std::to_string(exhaustive_cap()));
    std::size_t total = 0;
    for (std::size_t n = 1; n <= max_len; ++n) {
        std::size_t c = checked_pow(sigma, n);
        if (total > kMax - c) throw Error(ErrorKind::CapExceeded, "word count overflows");
        total += c;
    }
    return total;
}

Word word_at(std::size_t sigma, std::size_t rank) {
    std::size_t n = 1;
    for (std::size_t block = sigma; rank >= block; block = checked_pow(sigma, ++n)) rank -= block;
    Word w(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        w[i] = static_cast<Symbol>(rank % sigma);
        rank /= sigma;
    }
    return w;
}

std::vector<Word> enumerate_length(std::size_t sigma, std::size_t len) {
    word_count(sigma, len);  // cap and overflow guard
    std::vector<Word> out;
    out.reserve(checked_pow(sigma, len));
    Word w(len, 0);
    while (true) {
        out.push_back(w);
        std::size_t i = len;
        while (i > 0 && w[i - 1] + 1 == sigma) w[--i] = 0;
        if (i == 0) break;
        ++w[i - 1];
    }
    return out;
}

std::vector<Word> enumerate_words(std::size_t sigma, std::size_t max_len) {
    std::vector<Word> out;
    out.reserve(word_count(sigma, max_len));
    for (std::size_t n = 1; n <= max_len; ++n) {
        auto block = enumerate_length(sigma, n);
        std::move(block.begin(), block.end(), std::back_inserter(out));
    }
    return out;
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len) {
    return enumerate_words(alphabet.size(), max_len);
}

// ---------------------------------------------------------------------------
// Factorizations

std::vector<Factorization> all_factorizations(const FactorFamily& f, WordView w) {
    const std::size_t n = w.size();
    auto t = membership_table(n, [&](std::size_t i, std::size_t j) { return f.contains(w.subspan(i, j - i)); });
    std::vector<Factorization> out;
    for (const auto& cuts : all_cuts(t, n)) {
        Factorization fz;
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
            fz.factors.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(cuts[k]),
                                    w.begin() + static_cast<std::ptrdiff_t>(cuts[k + 1]));
        out.push_back(std::move(fz));
    }
    return out;
}

UniqueMaximalResult unique_maximal_check(const FactorFamily& f, WordView w) {
    const std::size_t n = w.size();
    auto t = membership_table(n, [&](std::size_t i, std::size_t j) { return f.contains(w.subspan(i, j - i)); });
    UniqueMaximalResult r;
    for (const auto& cuts : all_cuts(t, n)) {
        ++r.factorizations;
        if (!non_extendible(t, n, cuts)) continue;
        Factorization fz;
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
            fz.factors.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(cuts[k]),
                                    w.begin() + static_cast<std::ptrdiff_t>(cuts[k + 1]));
        r.maximal.push_back(std::move(fz));
    }
    r.unique = r.maximal.size() == 1;
    return r;
}

namespace {

struct UnitView {
    std::vector<Word> units;
    Word join(std::size_t i, std::size_t j) const {
        Word out;
        for (std::size_t k = i; k < j; ++k) out.insert(out.end(), units[k].begin(), units[k].end());
        return out;
    }
};

}  // namespace

std::vector<Factorization> all_unit_factorizations(const FactorFamily::Predicate& member, WordView w) {
    UnitView u{v_units(w)};
    const std::size_t n = u.units.size();
    auto t = membership_table(n, [&](std::size_t i, std::size_t j) { return member(u.join(i, j)); });
    std::vector<Factorization> out;
    for (const auto& cuts : all_cuts(t, n)) {
        Factorization fz{{}, FactorKind::Units};
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) fz.factors.push_back(u.join(cuts[k], cuts[k + 1]));
        out.push_back(std::move(fz));
    }
    return out;
}

UniqueMaximalResult unit_unique_maximal_check(const FactorFamily::Predicate& member, WordView w) {
    UnitView u{v_units(w)};
    const std::size_t n = u.units.size();
    auto t = membership_table(n, [&](std::size_t i, std::size_t j) { return member(u.join(i, j)); });
    UniqueMaximalResult r;
    for (const auto& cuts : all_cuts(t, n)) {
        ++r.factorizations;
        if (!non_extendible(t, n, cuts)) continue;
        Factorization fz{{}, FactorKind::Units};
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) fz.factors.push_back(u.join(cuts[k], cuts[k + 1]));
        r.maximal.push_back(std::move(fz));
    }
    r.unique = r.maximal.size() == 1;
    return r;
}

// ---------------------------------------------------------------------------
// Rotations and comparators

Word min_rotation_oracle(const Order& order, WordView w) {
    if (w.empty()) throw Error(ErrorKind::EmptyWord, "min_rotation_oracle: empty word");
    auto rots = rotations(w);
    if (std::set<Word>(rots.begin(), rots.end()).size() != rots.size())
        throw Error(ErrorKind::NonPrimitive, "class minimum requires a primitive word");
    return *std::min_element(rots.begin(), rots.end(), [&](const Word& a, const Word& b) { return order.less(a, b); });
}

std::vector<Word> star_path(WordView w) {
    std::vector<Word> path{Word(w.begin(), w.end())};
    while (!path.back().empty()) path.push_back(star_delete(path.back()));
    return path;
}

Comparison star_tree_cmp(WordView x, WordView y) {
    if (x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin())) return Comparison::Equal;
    const auto px = star_path(x);
    const auto py = star_path(y);
    const Word wx(x.begin(), x.end()), wy(y.begin(), y.end());
    if (std::find(py.begin(), py.end(), wx) != py.end()) return Comparison::Less;
    if (std::find(px.begin(), px.end(), wy) != px.end()) return Comparison::Greater;
    // Both paths end at the empty word, so a common ancestor exists. Path
    // entries have strictly decreasing lengths, so |a| = |b| below.
    for (std::size_t s = 0; s + 1 < px.size(); ++s) {
        auto it = std::find(py.begin(), py.end(), px[s + 1]);
        if (it == py.end()) continue;
        const Word& a = px[s];
        const Word& b = *(it - 1);
        for (std::size_t j = a.size(); j-- > 0;)
            if (a[j] != b[j]) return a[j] < b[j] ? Comparison::Less : Comparison::Greater;
        break;
    }
    throw Error(ErrorKind::Precondition, "star_tree_cmp: no differing children");
}

namespace {

// x is a proper prefix of y.
Comparison modalt_brute_prefix(WordView x, WordView y, std::size_t sigma) {
    if (x.empty()) return Comparison::Less;
    const std::size_t tail = y.size() - x.size();
    for (std::size_t len = 1; len <= tail; ++len) {
        for (const Word& z : enumerate_length(sigma, len)) {
            Word xz = concat(x, z);
            if (is_prefix(xz, y) || is_prefix(y, xz)) continue;
            if (cmp_alt(xz, y) == Comparison::Less) return Comparison::Less;
        }
    }
    return Comparison::Greater;
}

}  // namespace

Comparison modalt_brute(WordView x, WordView y, std::size_t sigma) {
    if (x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin())) return Comparison::Equal;
    if (x.size() < y.size() && is_prefix(x, y)) return modalt_brute_prefix(x, y, sigma);
    if (y.size() < x.size() && is_prefix(y, x)) return flip(modalt_brute_prefix(y, x, sigma));
    return cmp_alt(x, y);
}

}  // namespace wordforge
