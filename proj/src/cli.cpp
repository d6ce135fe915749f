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

#include "wordforge/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wordforge/builder.hpp"
#include "wordforge/canonical.hpp"
#include "wordforge/family.hpp"
#include "wordforge/oracle.hpp"
#include "wordforge/orders.hpp"
#include "wordforge/suites.hpp"
#include "wordforge/transforms.hpp"

namespace wordforge {

namespace {

using json = nlohmann::json;

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool json_out = false;
    bool ints = false;
    std::string alphabet_spec;
    std::string command;
};

struct Operands {
    Alphabet alphabet;
    std::vector<Word> words;
};

std::vector<std::string> split(std::string_view s, std::string_view seps) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (seps.find(c) != std::string_view::npos) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

Operands resolve(const Context& ctx, const std::vector<std::string>& texts) {
    if (ctx.ints) {
        std::optional<Alphabet> alpha;
        if (!ctx.alphabet_spec.empty()) {
            alpha = Alphabet::parse(ctx.alphabet_spec);
        } else {
            std::vector<long long> values;
            for (const auto& t : texts)
                for (const auto& tok : split(t, ", \t\n")) {
                    try {
                        std::size_t used = 0;
                        values.push_back(std::stoll(tok, &used));
                        if (used != tok.size()) throw std::invalid_argument(tok);
                    } catch (const std::exception&) {
                        throw Error(ErrorKind::Parse, "'" + tok + "' is not an integer symbol");
                    }
                }
            alpha = values.empty() ? Alphabet::from_chars("0") : Alphabet::integers(values);
        }
        Operands ops{*alpha, {}};
        for (const auto& t : texts) ops.words.push_back(ops.alphabet.encode(t, true));
        return ops;
    }
    Operands ops{ctx.alphabet_spec.empty() ? Alphabet::infer(texts) : Alphabet::parse(ctx.alphabet_spec), {}};
    for (const auto& t : texts) ops.words.push_back(ops.alphabet.encode(t, !ops.alphabet.single_char()));
    return ops;
}

std::string render(const Alphabet& a, WordView w) { return a.decode(w, a.single_char() ? "" : " "); }

std::string render_factors(const Alphabet& a, const Factorization& f) {
    std::string s;
    for (const auto& x : f.factors) s += "(" + render(a, x) + ")";
    return s;
}

json factors_json(const Alphabet& a, const Factorization& f) {
    json arr = json::array();
    for (const auto& x : f.factors) arr.push_back(render(a, x));
    return arr;
}

std::string read_input(const Context& ctx, const std::string& positional, const std::string& path) {
    std::string text;
    if (!path.empty()) {
        std::ifstream f(path);
        if (!f) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else if (positional == "-") {
        std::stringstream ss;
        ss << ctx.in.rdbuf();
        text = ss.str();
    } else {
        return positional;
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

void emit(const Context& ctx, json j) {
    j["v"] = 1;
    j["command"] = ctx.command;
    ctx.out << j.dump() << '\n';
}

// ---------------------------------------------------------------------------
// Commands

int cmd_cmp(Context& ctx, const std::string& order_name, const std::string& x, const std::string& y, bool trace) {
    const OrderSpec order = OrderSpec::parse(order_name);
    auto ops = resolve(ctx, {x, y});
    const Comparison c = cmp(order, ops.words[0], ops.words[1], ops.alphabet);
    auto path_of = [&](const Word& w) {
        std::vector<std::string> p;
        for (const auto& s : star_path(w)) p.push_back(s.empty() ? "ε" : render(ops.alphabet, s));
        return p;
    };
    const bool show_trace = trace && order.kind() == OrderKind::VOrder;
    if (ctx.json_out) {
        json j{{"order", order.name()}, {"x", x}, {"y", y}, {"result", to_string(c)}};
        if (show_trace)
            j["trace"] = {{"x", path_of(ops.words[0])},
                          {"y", path_of(ops.words[1])},
                          {"star_tree", to_string(star_tree_cmp(ops.words[0], ops.words[1]))}};
        emit(ctx, j);
        return 0;
    }
    ctx.out << to_string(c) << '\n';
    if (trace && !show_trace) ctx.err << "note: --trace applies to vorder only\n";
    if (show_trace) {
        auto line = [&](const char* label, const Word& w) {
            ctx.out << label;
            const auto p = path_of(w);
            for (std::size_t i = 0; i < p.size(); ++i) ctx.out << (i ? " > " : " ") << p[i];
            ctx.out << '\n';
        };
        line("x:", ops.words[0]);
        line("y:", ops.words[1]);
        ctx.out << "star tree: " << to_string(star_tree_cmp(ops.words[0], ops.words[1])) << '\n';
    }
    return 0;
}

int cmd_classify(Context& ctx, const std::string& text, const std::string& order_list) {
    auto ops = resolve(ctx, {text});
    const Word& w = ops.words[0];
    if (w.empty()) throw Error(ErrorKind::EmptyWord, "classify: empty word");
    std::vector<OrderSpec> orders;
    for (const auto& name : split(order_list, ",")) orders.push_back(OrderSpec::parse(name));

    ClassReport rep;
    std::string note;
    if (is_primitive(w)) {
        rep = class_report(w, orders, ops.alphabet.size());
    } else {
        rep.word = w;
        note = "not primitive: no unique class minimum";
    }
    const std::vector<std::pair<std::string, bool>> flags{{"primitive", rep.is_primitive},
                                                          {"lyndon", rep.is_lyndon},
                                                          {"v-word", rep.is_v_word},
                                                          {"galois", rep.is_galois},
                                                          {"border-free", rep.is_border_free}};
    if (ctx.json_out) {
        json j{{"word", render(ops.alphabet, w)}};
        for (const auto& [k, v] : flags) j["flags"][k] = v;
        j["minima"] = json::object();
        for (const auto& o : orders)
            if (rep.min_rotation.count(o.name()))
                j["minima"][o.name()] = {{"word", render(ops.alphabet, rep.min_rotation[o.name()])},
                                         {"rotation", rep.min_rotation_index[o.name()]}};
        if (!note.empty()) j["note"] = note;
        emit(ctx, j);
        return 0;
    }
    ctx.out << "word         " << render(ops.alphabet, w) << '\n';
    for (const auto& [k, v] : flags) ctx.out << std::left << std::setw(13) << k << (v ? "yes" : "no") << '\n';
    if (!note.empty()) {
        ctx.out << "note         " << note << '\n';
        return 0;
    }
    ctx.out << "minimal rotations\n";
    for (const auto& o : orders)
        ctx.out << "  " << std::left << std::setw(14) << o.name() << render(ops.alphabet, rep.min_rotation[o.name()])
                << "  (rotation " << rep.min_rotation_index[o.name()] << ")\n";
    return 0;
}

FactorFamily load_family(const Context& ctx, const std::string& spec, const std::optional<Alphabet>& fallback) {
    constexpr std::string_view builtin = "builtin:";
    if (spec.starts_with(builtin)) {
        Alphabet a = !ctx.alphabet_spec.empty() ? Alphabet::parse(ctx.alphabet_spec)
                                                 : fallback.value_or(Alphabet::binary());
        return builtin_family(spec.substr(builtin.size()), a);
    }
    return read_family_file(spec);
}

int cmd_factor(Context& ctx, const std::string& text, const std::string& method) {
    Factorization f;
    Alphabet alphabet = Alphabet::binary();
    constexpr std::string_view fam = "family:";
    constexpr std::string_view lexext = "lexext:";
    if (method.starts_with(fam)) {
        const std::string spec = method.substr(fam.size());
        std::optional<Alphabet> inferred;
        if (spec.starts_with("builtin:")) inferred = resolve(ctx, {text}).alphabet;
        FactorFamily family = load_family(ctx, spec, inferred);
        alphabet = family.alphabet();
        const Word w = alphabet.encode(text, !alphabet.single_char());
        f = maximal_factorization(family, w);
    } else {
        auto ops = resolve(ctx, {text});
        alphabet = ops.alphabet;
        const Word& w = ops.words[0];
        if (method == "lyndon") {
            f = duval_factorization(w);
        } else if (method == "vword") {
            f = v_factorization(w);
        } else if (method.starts_with(lexext)) {
            const OrderSpec inner = OrderSpec::parse(method.substr(lexext.size()));
            const std::size_t sigma = alphabet.size();
            f = unit_maximal_factorization(
                [&](WordView u) { return is_t_lex_word(inner.kind(), u, sigma); }, w);
        } else {
            throw Error(ErrorKind::Parse, "unknown method '" + method + "'");
        }
    }
    if (ctx.json_out) {
        emit(ctx, {{"word", text}, {"method", method}, {"factors", factors_json(alphabet, f)}});
        return 0;
    }
    ctx.out << render_factors(alphabet, f) << '\n';
    return 0;
}

int cmd_build(Context& ctx, const std::string& spec, std::size_t cap, std::string emit_mode, std::size_t limit) {
    if (ctx.json_out) emit_mode = "json";
    if (emit_mode != "text" && emit_mode != "json") throw Error(ErrorKind::Parse, "--emit must be text or json");
    FactorFamily input = load_family(ctx, spec, std::nullopt);
    if (!input.is_extensional())
        input = FactorFamily::extensional(input.alphabet(), input.members(cap), input.name());
    const BuildResult res = build_circ_umff(input, cap, limit == 0 ? std::max(kDefaultBuilderCap, exhaustive_cap()) : limit);
    const Alphabet& a = res.family.alphabet();

    auto ordinal = [](std::size_t i) { return "#" + std::to_string(i + 1); };
    if (emit_mode == "json") {
        json members = json::array();
        for (std::size_t i = 0; i < res.members.size(); ++i) {
            const auto& m = res.members[i];
            json j{{"word", render(a, m.word)}, {"origin", std::string(origin_name(m.origin))}, {"order", i + 1}};
            if (m.origin == Origin::Synthesized) j["pair"] = {m.s + 1, m.t + 1};
            members.push_back(j);
        }
        emit(ctx, {{"family", input.name()},
                   {"cap", cap},
                   {"alphabet", a.glyphs()},
                   {"members", members},
                   {"verified", res.verdict.passed()}});
        return 0;
    }
    std::map<Word, std::string> comments;
    for (std::size_t i = 0; i < res.members.size(); ++i) {
        const auto& m = res.members[i];
        std::string c = ordinal(i) + " " + std::string(origin_name(m.origin));
        if (m.origin == Origin::Synthesized)
            c += " from " + ordinal(m.s) + " " + ordinal(m.t) + " (" + render(a, res.members[m.s].word) + "." +
                 render(a, res.members[m.t].word) + ")";
        comments[m.word] = c;
    }
    ctx.out << "# circ-UMFF enlarged from " << input.name() << " up to length " << cap << "; verified\n";
    write_family(ctx.out, res.family, cap, comments);
    return 0;
}

json check_json(const CheckResult& c) {
    return {{"name", c.name},
            {"passed", c.passed},
            {"cases", c.cases},
            {"counterexamples", c.counterexamples},
            {"note", c.note}};
}

int cmd_verify(Context& ctx, const std::string& suite, const std::string& family_spec, std::size_t max_len) {
    if (max_len > exhaustive_cap())
        throw Error(ErrorKind::CapExceeded, "--max-len " + std::to_string(max_len) + " exceeds the exhaustive cap " +
                                                std::to_string(exhaustive_cap()) + " (set WORDFORGE_MAX_LEN)");
    if (!family_spec.empty()) {
        FactorFamily f = load_family(ctx, family_spec, std::nullopt);
        const auto v = circ_umff_verify(f, max_len);
        const auto& a = f.alphabet();
        auto xyz_text = [&](const XyzWitness& w) {
            return "x=" + render(a, w.x) + " y=" + render(a, w.y) + " z=" + render(a, w.z);
        };
        auto class_text = [&](const ClassWitness& w) {
            std::string s = "class of " + render(a, w.key) + ": " + std::to_string(w.members.size()) + " members";
            for (const auto& m : w.members) s += " " + render(a, m);
            return s;
        };
        if (ctx.json_out) {
            json xs = json::array(), cs = json::array(), ms = json::array();
            for (const auto& w : v.xyz_witnesses) xs.push_back(xyz_text(w));
            for (const auto& w : v.class_witnesses) cs.push_back(class_text(w));
            for (const auto& w : v.missing_letters) ms.push_back(render(a, w));
            emit(ctx, {{"family", f.name()},
                       {"bound", max_len},
                       {"ff", v.is_ff},
                       {"umff", v.umff_up_to_bound},
                       {"circ_umff", v.circ_umff_up_to_bound.value_or(false)},
                       {"missing_letters", ms},
                       {"xyz_witnesses", xs},
                       {"class_witnesses", cs},
                       {"passed", v.passed()}});
        } else {
            ctx.out << "family " << f.name() << " up to length " << max_len << '\n';
            ctx.out << (v.is_ff ? "PASS" : "FAIL") << "  factorization family\n";
            for (const auto& w : v.missing_letters) ctx.out << "      missing letter " << render(a, w) << '\n';
            ctx.out << (v.umff_up_to_bound ? "PASS" : "FAIL") << "  UMFF (xyz rule)\n";
            for (const auto& w : v.xyz_witnesses) ctx.out << "      " << xyz_text(w) << '\n';
            ctx.out << (v.circ_umff_up_to_bound.value_or(false) ? "PASS" : "FAIL") << "  circ-UMFF\n";
            for (const auto& w : v.class_witnesses) ctx.out << "      " << class_text(w) << '\n';
        }
        return v.passed() ? 0 : 1;
    }

    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    bool all_passed = true;
    json reports = json::array();
    for (const auto& name : names) {
        const SuiteReport r = run_suite(name, max_len);
        all_passed = all_passed && r.passed();
        if (ctx.json_out) {
            json checks = json::array();
            for (const auto& c : r.checks) checks.push_back(check_json(c));
            reports.push_back({{"suite", name}, {"passed", r.passed()}, {"checks", checks}});
            continue;
        }
        std::size_t ok = 0;
        ctx.out << "suite " << name << " (max-len " << max_len << ")\n";
        for (const auto& c : r.checks) {
            ok += c.passed;
            ctx.out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  [" << c.cases << " cases]";
            if (!c.note.empty()) ctx.out << "  " << c.note;
            ctx.out << '\n';
            for (const auto& ce : c.counterexamples) ctx.out << "      " << ce << '\n';
        }
        ctx.out << ok << "/" << r.checks.size() << " checks passed\n";
    }
    if (ctx.json_out) emit(ctx, {{"max_len", max_len}, {"passed", all_passed}, {"suites", reports}});
    return all_passed ? 0 : 1;
}

int cmd_bwt(Context& ctx, const std::string& text) {
    if (text.find('$') != std::string::npos) throw Error(ErrorKind::Sentinel, "input must not contain '$'");
    auto ops = resolve(ctx, {text});
    const Alphabet ext = sentinel_alphabet(ops.alphabet);
    const auto r = bwt_indexed(SentinelWord::from_body(ops.words[0]));
    const std::string out = render(ext, r.last);
    if (ctx.json_out)
        emit(ctx, {{"input", text}, {"output", out}, {"index", r.index}});
    else
        ctx.out << out << '\n';
    return 0;
}

int cmd_unbwt(Context& ctx, const std::string& text) {
    if (std::count(text.begin(), text.end(), '$') != 1)
        throw Error(ErrorKind::Sentinel, "input must contain exactly one '$'");
    std::string body_chars = text;
    body_chars.erase(std::remove(body_chars.begin(), body_chars.end(), '$'), body_chars.end());
    Alphabet body = Alphabet::from_chars("a");
    if (ctx.ints) {
        std::vector<std::string> toks;
        for (const auto& t : split(text, ", \t\n"))
            if (t != "$") toks.push_back(t);
        std::string joined;
        for (const auto& t : toks) joined += t + " ";
        body = resolve(ctx, {joined}).alphabet;
    } else {
        body = ctx.alphabet_spec.empty() ? Alphabet::infer(std::vector<std::string>{body_chars})
                                         : Alphabet::parse(ctx.alphabet_spec);
    }
    const Alphabet ext = sentinel_alphabet(body);
    const Word t = ext.encode(text, !ext.single_char());
    const std::string out = render(ext, bwt_inverse(t).extended());
    if (ctx.json_out)
        emit(ctx, {{"input", text}, {"output", out}});
    else
        ctx.out << out << '\n';
    return 0;
}

int cmd_abwt(Context& ctx, const std::string& text) {
    auto ops = resolve(ctx, {text});
    const auto r = abwt(ops.words[0]);
    const std::string out = render(ops.alphabet, r.last);
    const std::string first = render(ops.alphabet, abwt_matrix(ops.words[0]).front());
    if (ctx.json_out)
        emit(ctx, {{"input", text}, {"output", out}, {"index", r.index}, {"first_row", first}});
    else
        ctx.out << out << ' ' << r.index << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orders, canonical words and unique factorization families on strings", "wordforge"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{in, out, err, false, false, {}, {}};
    app.add_flag("--json", ctx.json_out, "Machine-readable output (schema v1)");
    app.add_flag("--ints", ctx.ints, "Words are comma or blank separated integer symbols");
    app.add_option("--alphabet", ctx.alphabet_spec, "Alphabet: 'abc', 'a-z' or '1,2,10' (default: inferred)");

    std::string order, x, y, word, orders = "lex,vorder,colex,relex,alt", method = "lyndon", in_path;
    std::string family, emit_mode = "text", suite = "paper";
    std::size_t cap = 0, limit = 0, max_len = 14;
    bool trace = false;

    auto* c_cmp = app.add_subcommand("cmp", "Compare two words under an order");
    c_cmp->add_option("order", order, "lex, colex, relex, alt, modalt, vorder or lexext:<inner>")->required();
    c_cmp->add_option("x", x)->required();
    c_cmp->add_option("y", y)->required();
    c_cmp->add_flag("--trace", trace, "Show star-deletion paths (vorder)");

    auto* c_classify = app.add_subcommand("classify", "Class flags and minimal rotations");
    c_classify->add_option("word", word, "Word, or - for stdin");
    c_classify->add_option("--orders", orders, "Comma-separated orders");
    c_classify->add_option("--in", in_path, "Read the word from a file");

    auto* c_factor = app.add_subcommand("factor", "Unique maximal factorization");
    c_factor->add_option("word", word, "Word, or - for stdin");
    c_factor->add_option("--method", method, "lyndon, vword, lexext:<inner> or family:<file|builtin:name>");
    c_factor->add_option("--in", in_path, "Read the word from a file");

    auto* c_build = app.add_subcommand("build-circ-umff", "Enlarge a binary border-free UMFF to a circ-UMFF");
    c_build->add_option("--family", family, "Family file or builtin:<name>")->required();
    c_build->add_option("--cap", cap, "Length cap")->required();
    c_build->add_option("--emit", emit_mode, "text or json");
    c_build->add_option("--limit", limit, "Override the refusal limit on --cap (default 20)");

    auto* c_verify = app.add_subcommand("verify", "Run exhaustive verification suites");
    c_verify->add_option("--suite", suite, "paper, orders, galois, umff, transforms or all");
    c_verify->add_option("--family", family, "Verify a family file or builtin:<name> instead");
    c_verify->add_option("--max-len", max_len, "Length bound for exhaustive checks");

    auto* c_bwt = app.add_subcommand("bwt", "Burrows-Wheeler transform (appends $)");
    c_bwt->add_option("word", word, "Text, or - for stdin");
    c_bwt->add_option("--in", in_path, "Read the text from a file");
    auto* c_unbwt = app.add_subcommand("unbwt", "Invert a Burrows-Wheeler transform");
    c_unbwt->add_option("word", word, "Transform containing one $, or - for stdin");
    c_unbwt->add_option("--in", in_path, "Read the text from a file");
    auto* c_abwt = app.add_subcommand("abwt", "Alternating Burrows-Wheeler transform of a primitive word");
    c_abwt->add_option("word", word, "Word, or - for stdin");
    c_abwt->add_option("--in", in_path, "Read the word from a file");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        const auto* sub = app.get_subcommands().front();
        ctx.command = sub->get_name();
        if (sub == c_cmp) return cmd_cmp(ctx, order, x, y, trace);
        if (sub == c_build) return cmd_build(ctx, family, cap, emit_mode, limit);
        if (sub == c_verify) return cmd_verify(ctx, suite, family, max_len);
        const std::string text = read_input(ctx, word, in_path);
        if (sub == c_classify) return cmd_classify(ctx, text, orders);
        if (sub == c_factor) return cmd_factor(ctx, text, method);
        if (sub == c_bwt) return cmd_bwt(ctx, text);
        if (sub == c_unbwt) return cmd_unbwt(ctx, text);
        if (sub == c_abwt) return cmd_abwt(ctx, text);
    } catch (const Error& e) {
        if (ctx.json_out)
            emit(ctx, {{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}});
        err << "wordforge: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace wordforge
