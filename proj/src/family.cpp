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

#include "wordforge/family.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wordforge/oracle.hpp"
#include "wordforge/sweep.hpp"

namespace wordforge {

namespace {

// Intensional families refuse to enumerate more words than this.
constexpr std::size_t kMaxEnumeration = std::size_t{1} << 24;

bool length_lex_less(const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

template <class T>
void flatten_into(std::vector<T>& out, std::vector<std::vector<T>>& parts, std::size_t cap) {
    for (auto& p : parts)
        for (auto& x : p) {
            if (out.size() >= cap) return;
            out.push_back(std::move(x));
        }
}

}  // namespace

// ---------------------------------------------------------------------------
// FactorFamily

FactorFamily FactorFamily::extensional(Alphabet alphabet, std::vector<Word> members, std::string name) {
    FactorFamily f(std::move(alphabet), std::move(name));
    for (auto& w : members) {
        if (w.empty()) throw Error(ErrorKind::EmptyWord, "family members must be non-empty");
        f.alphabet_.require(w);
        if (f.set_.insert(w).second) f.by_length_[w.size()].push_back(std::move(w));
    }
    for (auto& [len, ws] : f.by_length_) std::sort(ws.begin(), ws.end());
    return f;
}

FactorFamily FactorFamily::intensional(Alphabet alphabet, Predicate member, std::string name) {
    if (!member) throw Error(ErrorKind::Precondition, "membership predicate is empty");
    FactorFamily f(std::move(alphabet), std::move(name));
    f.predicate_ = std::move(member);
    return f;
}

bool FactorFamily::contains(WordView w) const {
    if (w.empty() || !alphabet_.contains(w)) return false;
    if (predicate_) return predicate_(w);
    return set_.count(Word(w.begin(), w.end())) > 0;
}

std::vector<Word> FactorFamily::members(std::size_t bound) const {
    std::vector<Word> out;
    if (!predicate_) {
        for (const auto& [len, ws] : by_length_) {
            if (len > bound) break;
            out.insert(out.end(), ws.begin(), ws.end());
        }
        return out;
    }
    if (bound == 0) return out;
    const std::size_t sigma = alphabet_.size();
    const std::size_t n = word_count(sigma, bound);
    if (n > kMaxEnumeration)
        throw Error(ErrorKind::CapExceeded, "enumerating " + std::to_string(n) + " words exceeds the limit");
    auto hits = sweep::select_parallel(n, [&](std::size_t r) { return predicate_(word_at(sigma, r)); });
    out.reserve(hits.size());
    for (std::size_t r : hits) out.push_back(word_at(sigma, r));
    return out;
}

std::optional<std::size_t> FactorFamily::length_bound() const {
    if (predicate_ || by_length_.empty()) return std::nullopt;
    return by_length_.rbegin()->first;
}

std::vector<Word> FactorFamily::missing_letters() const {
    std::vector<Word> out;
    for (std::size_t s = 0; s < alphabet_.size(); ++s) {
        Word w{static_cast<Symbol>(s)};
        if (!contains(w)) out.push_back(w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verification

FamilyVerdict xyz_check(const FactorFamily& f, std::size_t bound, std::size_t max_witnesses) {
    FamilyVerdict v;
    v.bound = bound;
    v.missing_letters = f.missing_letters();
    if (!v.missing_letters.empty())
        throw Error(ErrorKind::NotFF, "family '" + f.name() + "' lacks a single-letter word");
    v.is_ff = true;

    const auto m = f.members(bound);
    std::vector<std::vector<XyzWitness>> found(m.size());
    sweep::select_parallel(m.size(), [&](std::size_t i) {
        const Word& a = m[i];
        for (const Word& b : m) {
            const std::size_t lo = a.size() + b.size() > bound ? a.size() + b.size() - bound : 1;
            const std::size_t hi = std::min(a.size(), b.size());
            for (std::size_t k = std::max<std::size_t>(lo, 1); k < hi; ++k) {
                if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) continue;
                Word xyz = a;
                xyz.insert(xyz.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
                if (f.contains(xyz)) continue;
                if (found[i].size() >= max_witnesses) return true;
                const auto cut = static_cast<std::ptrdiff_t>(a.size() - k);
                found[i].push_back({Word(a.begin(), a.begin() + cut), Word(a.begin() + cut, a.end()),
                                    Word(b.begin() + static_cast<std::ptrdiff_t>(k), b.end())});
            }
        }
        return !found[i].empty();
    });
    flatten_into(v.xyz_witnesses, found, max_witnesses);
    v.umff_up_to_bound = v.xyz_witnesses.empty();
    return v;
}

FactorFamily xyz_closure(const FactorFamily& f, std::size_t bound) {
    if (!f.is_extensional()) throw Error(ErrorKind::Precondition, "closure needs an explicit family");
    auto words = f.members(*f.length_bound());
    FactorFamily cur = f;
    while (true) {
        auto v = xyz_check(cur, bound, static_cast<std::size_t>(-1));
        if (v.xyz_witnesses.empty()) return cur;
        for (const auto& x : v.xyz_witnesses) words.push_back(concat(concat(x.x, x.y), x.z));
        cur = FactorFamily::extensional(f.alphabet(), words, f.name());
    }
}

FamilyVerdict circ_umff_verify(const FactorFamily& f, std::size_t bound, std::size_t max_witnesses) {
    FamilyVerdict v;
    v.bound = bound;
    v.missing_letters = f.missing_letters();
    v.is_ff = v.missing_letters.empty();

    const std::size_t sigma = f.alphabet().size();
    const std::size_t n = bound == 0 ? 0 : word_count(sigma, bound);
    // Lyndon words are the class keys; count members among their rotations.
    auto bad = sweep::select_parallel(n, [&](std::size_t r) {
        Word w = word_at(sigma, r);
        if (!is_lyndon(w)) return false;
        std::size_t c = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (f.contains(rotate(w, i))) ++c;
        return c != 1;
    });
    for (std::size_t r : bad) {
        if (v.class_witnesses.size() >= max_witnesses) break;
        ClassWitness cw{word_at(sigma, r), {}};
        for (const Word& rot : rotations(cw.key))
            if (f.contains(rot)) cw.members.push_back(rot);
        v.class_witnesses.push_back(std::move(cw));
    }
    v.circ_umff_up_to_bound = bad.empty();

    if (v.is_ff) {
        auto x = xyz_check(f, bound, max_witnesses);
        v.umff_up_to_bound = x.umff_up_to_bound;
        v.xyz_witnesses = std::move(x.xyz_witnesses);
    }
    // Without every letter the family is not an FF; missing_letters is the
    // witness for both flags.
    if (!v.is_ff) v.circ_umff_up_to_bound = false;
    return v;
}

// ---------------------------------------------------------------------------
// Maximal factorization

MaximalFactorizer::MaximalFactorizer(FactorFamily family, std::size_t certified_bound)
    : family_(std::move(family)), bound_(certified_bound) {}

MaximalFactorizer MaximalFactorizer::certify(FactorFamily family, std::size_t bound) {
    auto v = xyz_check(family, bound, 1);
    if (!v.umff_up_to_bound) {
        const auto& w = v.xyz_witnesses.front();
        const auto& a = family.alphabet();
        throw Error(ErrorKind::NotUMFF, "family '" + family.name() + "' is not an UMFF: xy=" + a.decode(concat(w.x, w.y)) +
                                            ", yz=" + a.decode(concat(w.y, w.z)) + " but xyz=" +
                                            a.decode(concat(concat(w.x, w.y), w.z)) + " is not a member");
    }
    return MaximalFactorizer(std::move(family), bound);
}

Factorization MaximalFactorizer::operator()(WordView w) const {
    if (w.empty()) throw Error(ErrorKind::EmptyWord, "maximal_factorization: empty word");
    family_.alphabet().require(w);
    if (w.size() > bound_)
        throw Error(ErrorKind::NotUMFF, "family certified only up to length " + std::to_string(bound_));
    for (Symbol s : w)
        if (!family_.contains(Word{s}))
            throw Error(ErrorKind::NotFF, "symbol '" + family_.alphabet().decode(Word{s}) + "' is not a member");

    Factorization fz{{}, FactorKind::Family};
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t len = w.size() - i;
        while (len > 1 && !family_.contains(w.subspan(i, len))) --len;
        fz.factors.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + len));
        i += len;
    }
    if (auto ext = find_extension(family_, w, fz))
        throw Error(ErrorKind::NotUMFF, "greedy factor extends to [" + std::to_string(ext->begin) + ", " +
                                            std::to_string(ext->end) + ")");
    return fz;
}

Factorization maximal_factorization(const FactorFamily& f, WordView w) {
    if (w.empty()) throw Error(ErrorKind::EmptyWord, "maximal_factorization: empty word");
    f.alphabet().require(w);
    // Only overlaps inside w matter: occurrences xy = w[i, j) and yz = w[k, l)
    // with i < k < j < l need xyz = w[i, l) in the family. For each (i, l)
    // compare the furthest member end from i with the nearest member start
    // into l.
    const std::size_t n = w.size();
    std::vector<std::vector<char>> member(n + 1, std::vector<char>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) member[i][j] = f.contains(w.subspan(i, j - i));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t far = 0;  // largest j < l with w[i, j) a member
        for (std::size_t l = i + 2; l <= n; ++l) {
            if (member[i][l - 1]) far = l - 1;
            if (member[i][l] || far == 0) continue;
            for (std::size_t k = i + 1; k < far; ++k) {
                if (!member[k][l]) continue;
                const auto& a = f.alphabet();
                const std::string sep = a.single_char() ? "" : " ";
                throw Error(ErrorKind::NotUMFF, "family '" + f.name() + "' is not an UMFF on this word: xy=" +
                                                    a.decode(w.subspan(i, far - i), sep) +
                                                    ", yz=" + a.decode(w.subspan(k, l - k), sep) + " but xyz=" +
                                                    a.decode(w.subspan(i, l - i), sep) + " is not a member");
            }
        }
    }
    return MaximalFactorizer(f, n)(w);
}

std::optional<Interval> find_extension(const FactorFamily& f, WordView w, const Factorization& fz) {
    std::size_t p = 0;
    for (const auto& factor : fz.factors) {
        const std::size_t q = p + factor.size();
        for (std::size_t a = 0; a <= p; ++a)
            for (std::size_t b = q; b <= w.size(); ++b)
                if ((a != p || b != q) && f.contains(w.subspan(a, b - a))) return Interval{a, b};
        p = q;
    }
    return std::nullopt;
}

WOrder w_order(const FactorFamily& f, WordView u, WordView v) {
    if (!f.contains(u) || !f.contains(v)) throw Error(ErrorKind::NotMember, "W-order compares family members only");
    if (u.size() == v.size() && std::equal(u.begin(), u.end(), v.begin()))
        throw Error(ErrorKind::Precondition, "W-order compares distinct members");
    return f.contains(concat(u, v)) ? WOrder::Less : WOrder::GreaterOrUnordered;
}

std::vector<Misalignment> alignment_check(const FactorFamily& f, const OrderSpec& spec, std::size_t bound) {
    const Order order(spec, f.alphabet().size());
    const auto m = f.members(bound);
    std::vector<std::vector<Misalignment>> found(m.size());
    sweep::select_parallel(m.size(), [&](std::size_t i) {
        for (const Word& v : m) {
            const Word& u = m[i];
            if (u == v || u.size() + v.size() > bound) continue;
            const bool w_less = f.contains(concat(u, v));
            const bool o_less = order.less(u, v);
            if (w_less != o_less) found[i].push_back({u, v, w_less, o_less});
        }
        return !found[i].empty();
    });
    std::vector<Misalignment> out;
    flatten_into(out, found, static_cast<std::size_t>(-1));
    return out;
}

// ---------------------------------------------------------------------------
// Substring families

namespace {

using Units = std::vector<Word>;

Word join_units(const Units& u, std::size_t begin, std::size_t end) {
    Word out;
    for (std::size_t k = begin; k < end; ++k) out.insert(out.end(), u[k].begin(), u[k].end());
    return out;
}

bool units_primitive(const Units& u) {
    const std::size_t j = u.size();
    for (std::size_t p = 1; p < j; ++p) {
        if (j % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < j && periodic; ++i) periodic = u[i] == u[i - p];
        if (periodic) return false;
    }
    return true;
}

Units rotate_units(const Units& u, std::size_t t) {
    Units r;
    for (std::size_t i = 0; i < u.size(); ++i) r.push_back(u[(t + i) % u.size()]);
    return r;
}

}  // namespace

std::vector<Word> substring_domain_words(const SubstringDomain& d) {
    if (d.max_letter == 0) throw Error(ErrorKind::Precondition, "substring domain needs letters below L");
    std::vector<Word> parts{Word{}};
    for (std::size_t len = 1; len <= d.max_part_len; ++len) {
        auto block = enumerate_length(d.max_letter, len);
        parts.insert(parts.end(), block.begin(), block.end());
    }
    std::vector<Word> out;
    for (std::size_t k = 1; k <= d.max_units; ++k) {
        std::vector<std::size_t> idx(k, 0);
        while (true) {
            Word w;
            for (std::size_t i : idx) {
                w.push_back(d.max_letter);
                w.insert(w.end(), parts[i].begin(), parts[i].end());
            }
            out.push_back(std::move(w));
            std::size_t i = k;
            while (i > 0 && idx[i - 1] + 1 == parts.size()) idx[--i] = 0;
            if (i == 0) break;
            ++idx[i - 1];
        }
    }
    return out;
}

SubstringVerdict substring_circ_verify(const FactorFamily::Predicate& member, const SubstringDomain& d,
                                       std::size_t max_witnesses) {
    const auto words = substring_domain_words(d);
    SubstringVerdict v;

    // Class keys: primitive unit sequences least (as vectors) among their
    // unit rotations.
    std::vector<char> is_key(words.size(), 0);
    auto bad = sweep::select_parallel(words.size(), [&](std::size_t i) {
        const Units u = v_units(words[i]);
        if (!units_primitive(u)) return false;
        for (std::size_t t = 1; t < u.size(); ++t)
            if (rotate_units(u, t) < u) return false;
        is_key[i] = 1;
        std::size_t c = 0;
        for (std::size_t t = 0; t < u.size(); ++t)
            if (member(join_units(rotate_units(u, t), 0, u.size()))) ++c;
        return c != 1;
    });
    v.classes = static_cast<std::size_t>(std::count(is_key.begin(), is_key.end(), 1));
    for (std::size_t i : bad) {
        if (v.class_witnesses.size() >= max_witnesses) break;
        const Units u = v_units(words[i]);
        ClassWitness cw{words[i], {}};
        for (std::size_t t = 0; t < u.size(); ++t) {
            Word r = join_units(rotate_units(u, t), 0, u.size());
            if (member(r)) cw.members.push_back(std::move(r));
        }
        v.class_witnesses.push_back(std::move(cw));
    }

    auto hits = sweep::select_parallel(words.size(), [&](std::size_t i) { return member(words[i]); });
    std::vector<Units> m;
    for (std::size_t i : hits) m.push_back(v_units(words[i]));
    std::vector<std::vector<XyzWitness>> found(m.size());
    sweep::select_parallel(m.size(), [&](std::size_t i) {
        const Units& a = m[i];
        for (const Units& b : m) {
            for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
                if (a.size() + b.size() - k > d.max_units) continue;
                if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) continue;
                Units xyz = a;
                xyz.insert(xyz.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
                if (member(join_units(xyz, 0, xyz.size()))) continue;
                if (found[i].size() >= max_witnesses) return true;
                found[i].push_back({join_units(a, 0, a.size() - k), join_units(a, a.size() - k, a.size()),
                                    join_units(b, k, b.size())});
            }
        }
        return !found[i].empty();
    });
    flatten_into(v.xyz_witnesses, found, max_witnesses);
    return v;
}

Factorization unit_maximal_factorization(const FactorFamily::Predicate& member, WordView w) {
    const Units u = v_units(w);
    const std::size_t n = u.size();
    Factorization fz{{}, FactorKind::Units};
    std::vector<std::size_t> cuts{0};
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = n;
        while (j > i + 1 && !member(join_units(u, i, j))) --j;
        if (!member(join_units(u, i, j)))
            throw Error(ErrorKind::NotFF, "a single unit is not a member");
        fz.factors.push_back(join_units(u, i, j));
        cuts.push_back(j);
        i = j;
    }
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
        for (std::size_t a = 0; a <= cuts[k]; ++a)
            for (std::size_t b = cuts[k + 1]; b <= n; ++b)
                if ((a != cuts[k] || b != cuts[k + 1]) && member(join_units(u, a, b)))
                    throw Error(ErrorKind::NotUMFF, "greedy unit factor is extendible");
    return fz;
}

// ---------------------------------------------------------------------------
// Builtins

std::vector<std::string> builtin_family_names() {
    return {"lyndon", "vword", "galois", "galois-bf", "colyndon", "tword:<order>"};
}

FactorFamily builtin_family(const std::string& name, const Alphabet& alphabet) {
    const std::size_t sigma = alphabet.size();
    if (name == "lyndon") return FactorFamily::intensional(alphabet, [](WordView w) { return is_lyndon(w); }, name);
    if (name == "vword") return FactorFamily::intensional(alphabet, [](WordView w) { return is_v_word(w); }, name);
    if (name == "galois") return FactorFamily::intensional(alphabet, [](WordView w) { return is_galois(w); }, name);
    if (name == "galois-bf")
        return FactorFamily::intensional(alphabet, [](WordView w) { return is_galois(w) && is_border_free(w); }, name);
    if (name == "colyndon") {
        Order colex(OrderSpec::of(OrderKind::Colex), sigma);
        return FactorFamily::intensional(alphabet, [colex](WordView w) { return is_t_word(colex, w); }, name);
    }
    constexpr std::string_view prefix = "tword:";
    if (name.starts_with(prefix)) {
        Order order(OrderSpec::parse(name.substr(prefix.size())), sigma);
        return FactorFamily::intensional(
            alphabet, [order](WordView w) { return is_border_free(w) && is_t_word(order, w); }, name);
    }
    throw Error(ErrorKind::Parse, "unknown builtin family '" + name + "'");
}

// ---------------------------------------------------------------------------
// Files

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

FactorFamily read_family(std::istream& in, const std::string& name) {
    std::optional<Alphabet> alphabet;
    std::vector<Word> words;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(std::string_view(line).substr(0, line.find('#')));
        if (body.empty()) continue;
        try {
            if (!alphabet) {
                constexpr std::string_view kw = "alphabet";
                if (!body.starts_with(kw))
                    throw Error(ErrorKind::Parse, "expected an 'alphabet' header line");
                std::string spec = trim(std::string_view(body).substr(kw.size()));
                if (spec.empty()) throw Error(ErrorKind::Parse, "empty alphabet");
                alphabet = Alphabet::parse(spec);
                continue;
            }
            words.push_back(alphabet->encode(body, !alphabet->single_char()));
        } catch (const Error& e) {
            throw Error(ErrorKind::Parse, name + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!alphabet) throw Error(ErrorKind::Parse, name + ": missing 'alphabet' header");
    return FactorFamily::extensional(*alphabet, std::move(words), name);
}

FactorFamily read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open family file '" + path + "'");
    return read_family(in, path);
}

void write_family(std::ostream& out, const FactorFamily& f, std::size_t bound,
                  const std::map<Word, std::string>& comments) {
    const auto& a = f.alphabet();
    const std::string sep = a.single_char() ? "" : ",";
    out << "alphabet ";
    for (std::size_t i = 0; i < a.size(); ++i) out << (i > 0 ? sep : "") << a.glyphs()[i];
    out << '\n';
    auto m = f.members(bound);
    std::sort(m.begin(), m.end(), length_lex_less);
    for (const auto& w : m) {
        out << a.decode(w, sep);
        if (auto it = comments.find(w); it != comments.end()) out << "  # " << it->second;
        out << '\n';
    }
}

}  // namespace wordforge
