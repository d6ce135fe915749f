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

#include "wordforge/suites.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "wordforge/builder.hpp"
#include "wordforge/canonical.hpp"
#include "wordforge/family.hpp"
#include "wordforge/oracle.hpp"
#include "wordforge/sweep.hpp"
#include "wordforge/transforms.hpp"

namespace wordforge {

namespace {

constexpr std::size_t kKeep = 5;

const Alphabet& letters() {
    static const Alphabet a = Alphabet::from_chars("abcdefghijklmnopqrstuvwxyz");
    return a;
}

std::string show(WordView w) { return w.empty() ? std::string("ε") : letters().decode(w); }

std::string show_digits(WordView w) { return Alphabet::digits().decode(w); }

std::string show_factors(const Factorization& f, std::string (*render)(WordView)) {
    std::string out;
    for (const auto& x : f.factors) out += "(" + render(x) + ")";
    return out;
}

Word L(std::string_view text) { return letters().encode(text); }
Word D(std::string_view text) { return Alphabet::digits().encode(text); }

/* Sweeps [0, n) with `fail`, then describes the first few failing indices
 * serially. */
template <class Fail, class Describe>
CheckResult sweep_check(std::string name, std::size_t n, Fail&& fail, Describe&& describe) {
    CheckResult r;
    r.name = std::move(name);
    r.cases = n;
    const auto bad = sweep::select_parallel(n, fail);
    r.passed = bad.empty();
    for (std::size_t k = 0; k < bad.size() && k < kKeep; ++k) r.counterexamples.push_back(describe(bad[k]));
    if (!bad.empty()) r.note = std::to_string(bad.size()) + " of " + std::to_string(n) + " cases fail";
    return r;
}

CheckResult expect(std::string name, bool ok, std::string got = {}) {
    CheckResult r;
    r.name = std::move(name);
    r.cases = 1;
    r.passed = ok;
    if (!ok && !got.empty()) r.counterexamples.push_back(std::move(got));
    return r;
}

std::string cmp_text(Comparison c) { return to_string(c); }

std::string bounds(std::size_t sigma, std::size_t max_len) {
    return "sigma=" + std::to_string(sigma) + ", n<=" + std::to_string(max_len);
}

}  // namespace

namespace checks {

CheckResult order_axioms(const OrderSpec& spec, std::size_t sigma, std::size_t max_len) {
    std::vector<Word> ws{Word{}};
    for (auto& w : enumerate_words(sigma, max_len)) ws.push_back(std::move(w));
    const std::size_t n = ws.size();
    const Order order(spec, sigma);
    std::vector<Comparison> m(n * n);
    sweep::select_parallel(n, [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = order.compare(ws[i], ws[j]);
        return false;
    });
    auto pair_bad = [&](std::size_t i, std::size_t j) {
        const Comparison c = m[i * n + j];
        if (c != flip(m[j * n + i])) return true;            // antisymmetry
        if ((c == Comparison::Equal) != (i == j)) return true;  // totality, identity
        if (i == 0 && j != 0 && c != Comparison::Less) return true;  // empty word least
        return false;
    };
    auto r = sweep_check(
        spec.name() + " is a strict total order (" + bounds(sigma, max_len) + ")", n,
        [&](std::size_t i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (pair_bad(i, j)) return true;
                if (m[i * n + j] != Comparison::Less) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (m[j * n + k] == Comparison::Less && m[i * n + k] != Comparison::Less) return true;
            }
            return false;
        },
        [&](std::size_t i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (pair_bad(i, j)) return "pair " + show(ws[i]) + ", " + show(ws[j]);
                if (m[i * n + j] != Comparison::Less) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (m[j * n + k] == Comparison::Less && m[i * n + k] != Comparison::Less)
                        return "intransitive " + show(ws[i]) + " < " + show(ws[j]) + " < " + show(ws[k]);
            }
            return std::string("?");
        });
    return r;
}

CheckResult v_matches_star_tree(std::size_t sigma, std::size_t max_len) {
    const auto ws = enumerate_words(sigma, max_len);
    const std::size_t n = ws.size();
    return sweep_check(
        "V-order recursion agrees with star-tree comparison (" + bounds(sigma, max_len) + ")", n * n,
        [&](std::size_t p) { return cmp_v(ws[p / n], ws[p % n]) != star_tree_cmp(ws[p / n], ws[p % n]); },
        [&](std::size_t p) {
            return show(ws[p / n]) + " vs " + show(ws[p % n]) + ": recursion " + cmp_text(cmp_v(ws[p / n], ws[p % n])) +
                   ", star tree " + cmp_text(star_tree_cmp(ws[p / n], ws[p % n]));
        });
}

CheckResult v_subsequence(std::size_t sigma, std::size_t max_len) {
    const auto ws = enumerate_words(sigma, max_len);
    auto first_bad = [&](std::size_t i) -> std::optional<Word> {
        const Word& w = ws[i];
        const std::size_t full = (std::size_t{1} << w.size()) - 1;
        for (std::size_t mask = 0; mask < full; ++mask) {
            Word s;
            for (std::size_t b = 0; b < w.size(); ++b)
                if (mask >> b & 1) s.push_back(w[b]);
            if (cmp_v(s, w) != Comparison::Less) return s;
        }
        return std::nullopt;
    };
    return sweep_check(
        "proper subsequences precede in V-order (" + bounds(sigma, max_len) + ")", ws.size(),
        [&](std::size_t i) { return first_bad(i).has_value(); },
        [&](std::size_t i) { return show(*first_bad(i)) + " is not below " + show(ws[i]); });
}

CheckResult modalt_matches_search(std::size_t max_len) {
    const auto ws = enumerate_words(2, max_len);
    auto first_bad = [&](std::size_t i) -> std::optional<std::size_t> {
        const Word& y = ws[i];
        for (std::size_t k = 0; k < y.size(); ++k) {
            WordView x(y.data(), k);
            if (cmp_modalt(x, y, 2) != modalt_brute(x, y, 2) || cmp_modalt(y, x, 2) != modalt_brute(y, x, 2)) return k;
        }
        return std::nullopt;
    };
    return sweep_check(
        "modified alternating lexorder agrees with extension search (binary, n<=" + std::to_string(max_len) + ")",
        ws.size(), [&](std::size_t i) { return first_bad(i).has_value(); },
        [&](std::size_t i) {
            WordView x(ws[i].data(), *first_bad(i));
            return show(x) + " vs " + show(ws[i]) + ": closed form " + cmp_text(cmp_modalt(x, ws[i], 2)) + ", search " +
                   cmp_text(modalt_brute(x, ws[i], 2));
        });
}

CheckResult v_lyndon_equivalence(std::size_t max_units) {
    // Cores over {a, b, c}; the maximal letter is d.
    const auto cores = enumerate_words(3, max_units);
    auto build = [&](const Word& core) {
        Word w;
        for (Symbol s : core) {
            w.push_back(3);
            w.push_back(s);
        }
        return w;
    };
    return sweep_check(
        "V-word iff Lyndon core for single-letter parts (units<=" + std::to_string(max_units) + ")", cores.size(),
        [&](std::size_t i) {
            const Word w = build(cores[i]);
            return is_v_word(w) != is_v_lyndon_form(w) || is_v_lyndon_form(w) != is_lyndon(cores[i]);
        },
        [&](std::size_t i) {
            const Word w = build(cores[i]);
            return show(w) + ": V-word " + std::to_string(is_v_word(w)) + ", Lyndon core " +
                   std::to_string(is_lyndon(cores[i]));
        });
}

CheckResult lyndon_to_v_words(std::size_t max_lyndon_len, std::size_t max_h) {
    std::vector<Word> lyn;
    for (auto& w : enumerate_words(2, max_lyndon_len))
        if (is_lyndon(w)) lyn.push_back(std::move(w));
    const std::size_t n = lyn.size() * max_h;
    return sweep_check(
        "constructed words from Lyndon seeds are V-words (|l|<=" + std::to_string(max_lyndon_len) +
            ", h<=" + std::to_string(max_h) + ")",
        n, [&](std::size_t p) { return !is_v_word(wordforge::lyndon_to_v_words(lyn[p / max_h], 2, p % max_h + 1)); },
        [&](std::size_t p) {
            return show(wordforge::lyndon_to_v_words(lyn[p / max_h], 2, p % max_h + 1)) + " from " + show(lyn[p / max_h]);
        });
}

CheckResult galois_suffix(std::size_t max_len) {
    const auto ws = enumerate_words(2, max_len);
    auto first_bad = [&](std::size_t i) -> std::optional<std::size_t> {
        const Word& w = ws[i];
        if (!is_galois(w)) return std::nullopt;
        for (std::size_t k = 1; k < w.size(); ++k)
            if (cmp_alt(w, WordView(w).subspan(k)) != Comparison::Less) return k;
        return std::nullopt;
    };
    return sweep_check(
        "Galois words precede their proper suffixes (binary, n<=" + std::to_string(max_len) + ")", ws.size(),
        [&](std::size_t i) { return first_bad(i).has_value(); },
        [&](std::size_t i) { return show(ws[i]) + " vs suffix " + show(WordView(ws[i]).subspan(*first_bad(i))); });
}

CheckResult galois_concat(std::size_t max_len) {
    std::vector<Word> g;
    for (auto& w : enumerate_words(2, max_len - 1))
        if (is_galois(w)) g.push_back(std::move(w));
    const std::size_t n = g.size();
    // 0: not applicable, 1: holds, 2: u < v but uv not Galois, 3: uv Galois but not u < v.
    auto verdict = [&](std::size_t p) {
        const Word& u = g[p / n];
        const Word& v = g[p % n];
        if (u.size() + v.size() > max_len) return 0;
        const Word uv = concat(u, v);
        if (!is_primitive(uv)) return 0;
        const bool less = cmp_alt(u, v) == Comparison::Less;
        const bool gal = is_galois(uv);
        if (less == gal) return 1;
        return less ? 2 : 3;
    };
    auto r = sweep_check(
        "for Galois u, v with uv primitive: u <alt v iff uv is Galois (|uv|<=" + std::to_string(max_len) + ")", n * n,
        [&](std::size_t p) { return verdict(p) >= 2; },
        [&](std::size_t p) {
            return "(" + show(g[p / n]) + ", " + show(g[p % n]) + "): " +
                   (verdict(p) == 2 ? "u <alt v but uv is not Galois" : "uv is Galois but v <alt u");
        });
    std::size_t pairs = 0, forward = 0, backward = 0;
    for (std::size_t p = 0; p < n * n; ++p) {
        const int v = verdict(p);
        pairs += v > 0;
        forward += v == 2;
        backward += v == 3;
    }
    r.cases = pairs;
    r.note = std::to_string(pairs) + " pairs; " + std::to_string(forward) + " fail 'u <alt v => uv Galois', " +
             std::to_string(backward) + " fail 'uv Galois => u <alt v'";
    return r;
}

CheckResult bbf_prefix_suffix(std::size_t max_len) {
    const auto ws = enumerate_words(2, max_len);
    return sweep_check(
        "border-free Galois words of length >= 3 begin with ab and end with bb (n<=" + std::to_string(max_len) + ")",
        ws.size(),
        [&](std::size_t i) {
            const Word& w = ws[i];
            if (w.size() < 3 || !is_bbf_galois_direct(w)) return false;
            return !(w[0] == 0 && w[1] == 1 && w[w.size() - 2] == 1 && w.back() == 1);
        },
        [&](std::size_t i) { return show(ws[i]); });
}

CheckResult bbf_routes_agree(std::size_t max_len) {
    const auto ws = enumerate_words(2, max_len);
    auto r = sweep_check(
        "border-free Galois test agrees with the ab-Galois unit test (3<n<=" + std::to_string(max_len) + ")", ws.size(),
        [&](std::size_t i) {
            const Word& w = ws[i];
            return w.size() > 3 && is_bbf_galois_direct(w) != is_bbf_galois_structural(w);
        },
        [&](std::size_t i) {
            const Word& w = ws[i];
            return show(w) + ": direct " + std::to_string(is_bbf_galois_direct(w)) + ", units " +
                   std::to_string(is_bbf_galois_structural(w));
        });
    return r;
}

CheckResult fibonacci_witness() {
    const Alphabet ab = Alphabet::binary();
    auto f = FactorFamily::extensional(ab, {L("b"), L("a"), L("ab"), L("aba"), L("abaab"), L("abaababa")}, "fibonacci");
    auto v = xyz_check(f, 16, static_cast<std::size_t>(-1));
    bool seen = false;
    for (const auto& w : v.xyz_witnesses) seen |= w.x == L("abaab") && w.y == L("aba") && w.z == L("ab");
    auto r = expect("Fibonacci prefixes violate the xyz rule at x=abaab, y=aba, z=ab", !v.umff_up_to_bound && seen,
                    "witness not reported");
    r.note = std::to_string(v.xyz_witnesses.size()) + " violations";
    return r;
}

CheckResult closure_example() {
    const Alphabet abc = Alphabet::from_chars("abc");
    auto f = FactorFamily::extensional(abc, {L("a"), L("b"), L("c"), L("ab"), L("abc"), L("cab")}, "abc");
    auto first = xyz_check(f, 6, static_cast<std::size_t>(-1));
    bool direct = false;
    for (const auto& w : first.xyz_witnesses) direct |= concat(concat(w.x, w.y), w.z) == L("abcab");
    auto closed = xyz_closure(f, 6);
    const bool ok = direct && closed.contains(L("abcab")) && closed.contains(L("abcabc"));
    return expect("xyz closure of {a,b,c,ab,abc,cab} adds abcab and then abcabc", ok, "closure incomplete");
}

CheckResult galois_bf_xyz(std::size_t max_len) {
    auto f = builtin_family("galois-bf", Alphabet::binary());
    auto v = xyz_check(f, max_len);
    auto r = expect("border-free Galois words satisfy the xyz rule (n<=" + std::to_string(max_len) + ")",
                    v.umff_up_to_bound && f.contains(L("abababbb")) && f.contains(L("ababbbbb")) &&
                        f.contains(L("abababbbbb")));
    for (std::size_t k = 0; k < v.xyz_witnesses.size() && k < kKeep; ++k) {
        const auto& w = v.xyz_witnesses[k];
        r.counterexamples.push_back("x=" + show(w.x) + " y=" + show(w.y) + " z=" + show(w.z));
    }
    r.cases = f.members(max_len).size();
    return r;
}

CheckResult tword_circ_umff(const OrderSpec& spec, std::size_t max_len) {
    auto f = builtin_family("tword:" + spec.name(), Alphabet::binary());
    auto v = circ_umff_verify(f, max_len, static_cast<std::size_t>(-1));
    CheckResult r;
    r.name = "border-free " + spec.name() + "-minimal rotations form a circ-UMFF (binary, n<=" +
             std::to_string(max_len) + ")";
    r.cases = f.members(max_len).size();
    // Classes whose order-minimum is bordered have no border-free minimal
    // member; those are reported, not hidden.
    const Order order(spec, 2);
    std::size_t bordered = 0;
    for (const auto& cw : v.class_witnesses)
        if (cw.members.empty() && !is_border_free(t_word_of_class(order, cw.key))) ++bordered;
    const bool only_bordered = bordered == v.class_witnesses.size();
    r.passed = v.umff_up_to_bound && only_bordered;
    for (std::size_t k = 0; k < v.class_witnesses.size() && k < kKeep; ++k) {
        const auto& cw = v.class_witnesses[k];
        r.counterexamples.push_back("class of " + show(cw.key) + " has " + std::to_string(cw.members.size()) +
                                    " members; minimum " + show(t_word_of_class(order, cw.key)));
    }
    for (std::size_t k = 0; k < v.xyz_witnesses.size() && k < kKeep; ++k) {
        const auto& w = v.xyz_witnesses[k];
        r.counterexamples.push_back("xyz: x=" + show(w.x) + " y=" + show(w.y) + " z=" + show(w.z));
    }
    if (!v.class_witnesses.empty())
        r.note = std::to_string(v.class_witnesses.size()) + " classes unrepresented (bordered minimum: " +
                 std::to_string(bordered) + ")";
    return r;
}

CheckResult substring_circ_umff(OrderKind inner, std::size_t max_units) {
    const SubstringDomain d{2, max_units, 2};
    auto v = substring_circ_verify([inner](WordView w) { return is_t_lex_word(inner, w, 3); }, d);
    CheckResult r;
    r.name = "lexext:" + std::string(order_kind_name(inner)) + " substring words: one per substring class (units<=" +
             std::to_string(max_units) + ")";
    r.cases = v.classes;
    r.passed = v.passed();
    for (std::size_t k = 0; k < v.class_witnesses.size() && k < kKeep; ++k)
        r.counterexamples.push_back("class of " + show(v.class_witnesses[k].key));
    for (std::size_t k = 0; k < v.xyz_witnesses.size() && k < kKeep; ++k) {
        const auto& w = v.xyz_witnesses[k];
        r.counterexamples.push_back("xyz: x=" + show(w.x) + " y=" + show(w.y) + " z=" + show(w.z));
    }
    return r;
}

CheckResult factorizer_matches_oracle(const std::string& family, std::size_t max_len) {
    const auto factorizer = MaximalFactorizer::certify(builtin_family(family, Alphabet::binary()), max_len);
    const auto ws = enumerate_words(2, max_len);
    auto fast = [&](const Word& w) { return family == "lyndon" ? duval_factorization(w) : v_factorization(w); };
    return sweep_check(
        "maximal " + family + " factorization matches the exhaustive oracle (binary, n<=" + std::to_string(max_len) + ")",
        ws.size(),
        [&](std::size_t i) {
            const auto got = factorizer(ws[i]);
            const auto oracle = unique_maximal_check(factorizer.family(), ws[i]);
            return !oracle.unique || !(oracle.maximal.front() == got) || !(fast(ws[i]) == got);
        },
        [&](std::size_t i) {
            const auto oracle = unique_maximal_check(factorizer.family(), ws[i]);
            return show(ws[i]) + ": greedy " + show_factors(factorizer(ws[i]), show) + ", oracle " +
                   std::to_string(oracle.maximal.size()) + " maximal";
        });
}

CheckResult border_free_ff_random(std::size_t families, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::vector<Word>> fams;
    for (std::size_t k = 0; k < families; ++k) {
        std::vector<Word> multi;
        std::uniform_int_distribution<std::size_t> len(2, 7);
        for (int attempt = 0; attempt < 60 && multi.size() < 6; ++attempt) {
            Word c(len(rng));
            for (auto& s : c) s = static_cast<Symbol>(rng() & 1);
            if (!is_border_free(c) || std::find(multi.begin(), multi.end(), c) != multi.end()) continue;
            bool ok = true;
            for (const auto& m : multi) ok = ok && is_border_free(concat(c, m)) && is_border_free(concat(m, c));
            if (ok) multi.push_back(std::move(c));
        }
        multi.push_back({0});
        multi.push_back({1});
        fams.push_back(std::move(multi));
    }
    const Alphabet ab = Alphabet::binary();
    return sweep_check(
        "random families with border-free members and concatenations are UMFFs (" + std::to_string(families) +
            " families)",
        fams.size(),
        [&](std::size_t i) { return !xyz_check(FactorFamily::extensional(ab, fams[i]), 14, 1).umff_up_to_bound; },
        [&](std::size_t i) {
            std::string s = "{";
            for (const auto& w : fams[i]) s += show(w) + ",";
            return s + "}";
        });
}

CheckResult bwt_round_trip(std::size_t max_len) {
    std::vector<Word> ws{Word{}};
    for (auto& w : enumerate_words(2, max_len)) ws.push_back(std::move(w));
    return sweep_check(
        "inverse BWT recovers every body (binary, n<=" + std::to_string(max_len) + ")", ws.size(),
        [&](std::size_t i) { return bwt_inverse(bwt(SentinelWord::from_body(ws[i]))).body() != ws[i]; },
        [&](std::size_t i) { return show(ws[i]); });
}

CheckResult abwt_first_row(std::size_t max_len) {
    const auto ws = enumerate_words(2, max_len);
    return sweep_check(
        "first row of the alternating BWT matrix is the Galois rotation (binary, n<=" + std::to_string(max_len) + ")",
        ws.size(),
        [&](std::size_t i) { return is_primitive(ws[i]) && abwt_matrix(ws[i]).front() != galois_rotation(ws[i]).word; },
        [&](std::size_t i) { return show(ws[i]); });
}

std::vector<CheckResult> golden() {
    std::vector<CheckResult> out;

    out.push_back(expect("929 precedes 922911 in V-order",
                         cmp_v(D("929"), D("922911")) == Comparison::Less &&
                             star_tree_cmp(D("929"), D("922911")) == Comparison::Less));
    out.push_back(expect("unique follows equitant in V-order",
                         cmp_v(L("unique"), L("equitant")) == Comparison::Greater &&
                             star_tree_cmp(L("unique"), L("equitant")) == Comparison::Greater));
    {
        const std::vector<Word> chain{D("6263"), D("6362"), D("2636"), D("3626")};
        bool ok = true;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) ok = ok && cmp_v(chain[i], chain[i + 1]) == Comparison::Less;
        out.push_back(expect("V-order chain 6263 < 6362 < 2636 < 3626", ok));
    }
    {
        auto d = duval_factorization(D("33132421"));
        auto v = v_factorization(D("33132421"));
        out.push_back(expect("Lyndon factorization of 33132421 is (3)(3)(13242)(1)",
                             show_factors(d, show_digits) == "(3)(3)(13242)(1)", show_factors(d, show_digits)));
        out.push_back(expect("V-word factorization of 33132421 is (33132)(421)",
                             show_factors(v, show_digits) == "(33132)(421)", show_factors(v, show_digits)));
    }
    {
        const Word w = D("7547223");
        bool ok = true;
        for (std::size_t k = w.size() - 1; k > 0; --k)
            ok = ok && cmp_v(WordView(w).subspan(k), WordView(w).subspan(k - 1)) == Comparison::Less;
        ok = ok && cmp_v(D("772"), w) == Comparison::Less;
        out.push_back(expect("suffixes of 7547223 increase with length in V-order; 772 precedes 7547223", ok));
    }
    {
        const std::vector<OrderSpec> orders{OrderSpec::parse("lex"), OrderSpec::parse("vorder"), OrderSpec::parse("colex"),
                                            OrderSpec::parse("relex"), OrderSpec::parse("alt")};
        auto rep = class_report(D("3177412"), orders, 10);
        std::string got;
        for (const auto& o : orders) got += o.name() + ":" + show_digits(rep.min_rotation[o.name()]) + " ";
        out.push_back(expect("class minima of 3177412: lex 1231774, vorder/colex/relex 7741231, alt 1774123",
                             got == "lex:1231774 vorder:7741231 colex:7741231 relex:7741231 alt:1774123 ", got));
    }
    {
        const Alphabet ext = sentinel_alphabet(Alphabet::binary());
        const Word t = bwt(SentinelWord::from_body(L("abab")));
        const bool ok = ext.decode(t) == "bb$aa" && bwt_inverse(t).body() == L("abab");
        out.push_back(expect("BWT of abab$ is bb$aa and inverts", ok, ext.decode(t)));
    }
    {
        bool ok = true;
        for (auto w : {"ab", "aba", "abb", "abba", "ababa", "ababaa", "ababba", "abaabb"}) ok = ok && is_galois(L(w));
        ok = ok && !is_galois(L("aabbab"));
        out.push_back(expect("Galois: ab aba abb abba ababa ababaa ababba abaabb; not aabbab", ok));
    }
    {
        auto g = builtin_family("galois", Alphabet::binary());
        auto all = all_factorizations(g, L("ababab"));
        bool ab3 = false, ab5 = false;
        for (const auto& f : all) {
            const auto s = show_factors(f, show);
            ab3 |= s == "(ab)(ab)(ab)";
            ab5 |= s == "(ababa)(b)";
        }
        const bool lyn = show_factors(duval_factorization(L("ababab")), show) == "(ab)(ab)(ab)";
        out.push_back(expect("Galois factorizations of ababab include (ab)(ab)(ab) and (ababa)(b); Lyndon is (ab)(ab)(ab)",
                             ab3 && ab5 && lyn));
    }
    {
        const bool ok = is_bbf_galois(L("abababbb")) && is_bbf_galois(L("ababbbbb")) && is_bbf_galois(L("abababbbbb"));
        out.push_back(expect("xy=abababbb and yz=ababbbbb give abababbbbb, all border-free Galois", ok));
    }
    {
        auto f = ab_galois_factorization(L("abbbabbabbbbb"));
        out.push_back(expect("ab-Galois factorization of abbbabbabbbbb is (abbb)(abb)(abbbbb)",
                             show_factors(f, show) == "(abbb)(abb)(abbbbb)", show_factors(f, show)));
    }
    {
        auto in = FactorFamily::extensional(Alphabet::binary(), {L("a"), L("b"), L("abb"), L("ababb")}, "V");
        std::string got;
        bool ok = false;
        try {
            auto res = build_circ_umff(in, 5);
            std::set<std::string> have;
            for (const auto& w : res.family.members(5)) have.insert(show(w));
            const std::set<std::string> want{"a",     "b",     "ab",    "aab",   "abb",   "aaab",  "aabb",
                                             "abbb",  "aaaab", "aaabb", "aabab", "aabbb", "ababb", "abbbb"};
            ok = have == want;
            for (const auto& s : have) got += s + " ";
        } catch (const Error& e) {
            got = e.what();
        }
        out.push_back(expect("enlarging {a,b,abb,ababb} at length 5 gives the expected 14 words", ok, got));
    }
    return out;
}

}  // namespace checks

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> suite_names() { return {"paper", "orders", "galois", "umff", "transforms"}; }

SuiteReport run_suite(const std::string& name, std::size_t max_len) {
    SuiteReport r{name, max_len, {}};
    auto b = [&](std::size_t ceiling) { return std::max<std::size_t>(1, std::min(max_len, ceiling)); };
    auto& c = r.checks;
    if (name == "paper") {
        c = checks::golden();
    } else if (name == "orders") {
        for (auto o : {"lex", "colex", "relex", "alt", "modalt", "vorder"})
            c.push_back(checks::order_axioms(OrderSpec::parse(o), 2, b(6)));
        c.push_back(checks::v_matches_star_tree(2, b(6)));
        c.push_back(checks::v_matches_star_tree(3, b(6)));
        c.push_back(checks::v_subsequence(2, b(8)));
        c.push_back(checks::v_subsequence(3, b(8)));
        c.push_back(checks::modalt_matches_search(b(8)));
        c.push_back(checks::v_lyndon_equivalence(b(6)));
        c.push_back(checks::lyndon_to_v_words(b(6), 3));
    } else if (name == "galois") {
        c.push_back(checks::galois_suffix(b(10)));
        c.push_back(checks::galois_concat(std::max<std::size_t>(2, b(10))));
        c.push_back(checks::bbf_prefix_suffix(b(14)));
        c.push_back(checks::bbf_routes_agree(b(14)));
    } else if (name == "umff") {
        c.push_back(checks::fibonacci_witness());
        c.push_back(checks::closure_example());
        c.push_back(checks::galois_bf_xyz(b(10)));
        for (auto o : {"lex", "colex", "relex", "vorder", "alt"})
            c.push_back(checks::tword_circ_umff(OrderSpec::parse(o), b(8)));
        c.push_back(checks::substring_circ_umff(OrderKind::Colex, b(5)));
        c.push_back(checks::factorizer_matches_oracle("lyndon", b(12)));
        c.push_back(checks::factorizer_matches_oracle("vword", b(12)));
        c.push_back(checks::border_free_ff_random(200, 20261015u));
    } else if (name == "transforms") {
        c.push_back(checks::bwt_round_trip(b(10)));
        c.push_back(checks::abwt_first_row(b(10)));
    } else {
        throw Error(ErrorKind::Parse, "unknown suite '" + name + "'");
    }
    return r;
}

}  // namespace wordforge
