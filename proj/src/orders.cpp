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

#include "wordforge/orders.hpp"

#include <algorithm>

namespace wordforge {

namespace {

Comparison by_size(std::size_t a, std::size_t b) noexcept {
    return a < b ? Comparison::Less : (a > b ? Comparison::Greater : Comparison::Equal);
}

Comparison compare_kind(OrderKind kind, WordView x, WordView y, std::size_t alphabet_size) {
    switch (kind) {
        case OrderKind::Lex: return cmp_lex(x, y);
        case OrderKind::Colex: return cmp_colex(x, y);
        case OrderKind::Relex: return cmp_relex(x, y);
        case OrderKind::Alt: return cmp_alt(x, y);
        case OrderKind::Modalt: return cmp_modalt(x, y, alphabet_size);
        case OrderKind::VOrder: return cmp_v(x, y);
        case OrderKind::LexExt: break;
    }
    throw Error(ErrorKind::Precondition, "lexext cannot be nested");
}

}  // namespace

const char* to_string(Comparison c) noexcept {
    switch (c) {
        case Comparison::Less: return "LT";
        case Comparison::Equal: return "EQ";
        case Comparison::Greater: return "GT";
    }
    return "??";
}

std::string_view order_kind_name(OrderKind kind) noexcept {
    switch (kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::Colex: return "colex";
        case OrderKind::Relex: return "relex";
        case OrderKind::Alt: return "alt";
        case OrderKind::Modalt: return "modalt";
        case OrderKind::VOrder: return "vorder";
        case OrderKind::LexExt: return "lexext";
    }
    return "?";
}

OrderSpec OrderSpec::of(OrderKind kind) {
    if (kind == OrderKind::LexExt)
        throw Error(ErrorKind::Precondition, "lexext needs an inner order");
    return OrderSpec(kind, std::nullopt);
}

OrderSpec OrderSpec::lexext(OrderKind inner) {
    if (inner == OrderKind::LexExt)
        throw Error(ErrorKind::Precondition, "lexext cannot be nested");
    return OrderSpec(OrderKind::LexExt, inner);
}

OrderSpec OrderSpec::parse(std::string_view name) {
    auto simple = [](std::string_view n) -> std::optional<OrderKind> {
        for (OrderKind k : {OrderKind::Lex, OrderKind::Colex, OrderKind::Relex, OrderKind::Alt,
                            OrderKind::Modalt, OrderKind::VOrder})
            if (order_kind_name(k) == n) return k;
        return std::nullopt;
    };
    if (auto k = simple(name)) return of(*k);
    constexpr std::string_view prefix = "lexext:";
    if (name.starts_with(prefix)) {
        auto inner_name = name.substr(prefix.size());
        if (auto k = simple(inner_name)) return lexext(*k);
        if (inner_name.starts_with("lexext"))
            throw Error(ErrorKind::Parse, "lexext cannot be nested");
    }
    throw Error(ErrorKind::Parse, "unknown order '" + std::string(name) + "'");
}

std::string OrderSpec::name() const {
    std::string n(order_kind_name(kind_));
    if (inner_) n += ":" + std::string(order_kind_name(*inner_));
    return n;
}

Comparison cmp_lex(WordView x, WordView y) noexcept {
    const std::size_t m = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < m; ++i)
        if (x[i] != y[i]) return x[i] < y[i] ? Comparison::Less : Comparison::Greater;
    return by_size(x.size(), y.size());
}

Comparison cmp_colex(WordView x, WordView y) noexcept {
    const std::size_t m = std::min(x.size(), y.size());
    for (std::size_t i = 1; i <= m; ++i) {
        Symbol a = x[x.size() - i], b = y[y.size() - i];
        if (a != b) return a < b ? Comparison::Less : Comparison::Greater;
    }
    return by_size(x.size(), y.size());
}

Comparison cmp_relex(WordView x, WordView y) noexcept {
    const std::size_t m = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < m; ++i)
        if (x[i] != y[i]) return x[i] > y[i] ? Comparison::Less : Comparison::Greater;
    return by_size(x.size(), y.size());
}

Comparison cmp_alt(WordView x, WordView y) noexcept {
    const std::size_t m = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (x[i] == y[i]) continue;
        const bool odd = (i + 1) % 2 == 1;
        const bool x_first = odd ? x[i] < y[i] : x[i] > y[i];
        return x_first ? Comparison::Less : Comparison::Greater;
    }
    if (x.size() == y.size()) return Comparison::Equal;
    if (x.size() < y.size()) return x.size() % 2 == 0 ? Comparison::Less : Comparison::Greater;
    return y.size() % 2 == 0 ? Comparison::Greater : Comparison::Less;
}

namespace {

// x is a proper prefix of y.
Comparison modalt_prefix(WordView x, WordView y, std::size_t alphabet_size) noexcept {
    if (x.empty()) return Comparison::Less;
    const Symbol top = alphabet_size == 0 ? 0 : static_cast<Symbol>(alphabet_size - 1);
    for (std::size_t p = x.size() + 1; p <= y.size(); ++p) {
        const Symbol c = y[p - 1];
        const bool witness = (p % 2 == 1) ? c > 0 : c < top;
        if (witness) return Comparison::Less;
    }
    return Comparison::Greater;
}

}  // namespace

Comparison cmp_modalt(WordView x, WordView y, std::size_t alphabet_size) noexcept {
    if (x.size() < y.size() && is_prefix(x, y)) return modalt_prefix(x, y, alphabet_size);
    if (y.size() < x.size() && is_prefix(y, x)) return flip(modalt_prefix(y, x, alphabet_size));
    return cmp_alt(x, y);
}

Comparison cmp_v(WordView x, WordView y) noexcept {
    if (x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin())) return Comparison::Equal;
    if (x.empty()) return Comparison::Less;
    if (y.empty()) return Comparison::Greater;

    const Symbol lx = *std::max_element(x.begin(), x.end());
    const Symbol ly = *std::max_element(y.begin(), y.end());
    if (lx != ly) return lx < ly ? Comparison::Less : Comparison::Greater;

    const auto cx = std::count(x.begin(), x.end(), lx);
    const auto cy = std::count(y.begin(), y.end(), ly);
    if (cx != cy) return cx < cy ? Comparison::Less : Comparison::Greater;

    // Same letter and count, so both have cx + 1 parts; the first differing
    // pair decides.
    auto xi = x.begin();
    auto yi = y.begin();
    while (true) {
        auto xe = std::find(xi, x.end(), lx);
        auto ye = std::find(yi, y.end(), ly);
        WordView px(xi, xe), py(yi, ye);
        if (px.size() != py.size() || !std::equal(px.begin(), px.end(), py.begin())) return cmp_v(px, py);
        // x != y guarantees a differing part before either word runs out.
        xi = xe + 1;
        yi = ye + 1;
    }
}

std::vector<Word> lexext_units(WordView w) {
    std::vector<Word> units;
    if (w.empty()) return units;
    const Symbol l = *std::max_element(w.begin(), w.end());
    auto it = std::find(w.begin(), w.end(), l);
    if (it != w.begin()) units.emplace_back(w.begin(), it);
    while (it != w.end()) {
        auto next = std::find(it + 1, w.end(), l);
        units.emplace_back(it, next);
        it = next;
    }
    return units;
}

Comparison cmp_lexext(OrderKind inner, WordView x, WordView y, std::size_t alphabet_size) {
    if (inner == OrderKind::LexExt) throw Error(ErrorKind::Precondition, "lexext cannot be nested");
    const auto ux = lexext_units(x);
    const auto uy = lexext_units(y);
    const std::size_t m = std::min(ux.size(), uy.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (ux[i] == uy[i]) continue;
        return compare_kind(inner, ux[i], uy[i], alphabet_size);
    }
    return by_size(ux.size(), uy.size());
}

Order::Order(OrderSpec spec, std::size_t alphabet_size) : spec_(spec), alphabet_size_(alphabet_size) {
    if (alphabet_size == 0) throw Error(ErrorKind::Precondition, "alphabet size must be positive");
}

Comparison Order::compare(WordView x, WordView y) const {
    if (spec_.kind() == OrderKind::LexExt) return cmp_lexext(*spec_.inner(), x, y, alphabet_size_);
    return compare_kind(spec_.kind(), x, y, alphabet_size_);
}

Comparison cmp(const OrderSpec& order, WordView x, WordView y, const Alphabet& alphabet) {
    alphabet.require(x);
    alphabet.require(y);
    return Order(order, alphabet.size()).compare(x, y);
}

}  // namespace wordforge
