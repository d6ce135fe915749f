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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "wordforge/cli.hpp"

using namespace wordforge;

namespace {

struct Run {
    int code = 0;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("cmp") {
    CHECK(run({"cmp", "vorder", "929", "922911"}).out == "LT\n");
    CHECK(run({"cmp", "alt", "1774123", "1231774"}).out == "LT\n");
    CHECK(run({"cmp", "lex", "a", "a"}).out == "EQ\n");
    CHECK(run({"cmp", "colex", "321", "54"}).out == "LT\n");
    CHECK(run({"cmp", "vorder", "unique", "equitant"}).out == "GT\n");
    const auto t = run({"cmp", "vorder", "929", "922911", "--trace"});
    CHECK(t.out.find("92291 > 9229") != std::string::npos);
    CHECK(run({"--ints", "cmp", "lex", "10,2", "9"}).out == "GT\n");
    CHECK(run({"cmp", "lex", "a"}).code == 2);
    CHECK(run({"cmp", "shortlex", "a", "b"}).code == 1);
}

TEST_CASE("classify") {
    const auto r = run({"classify", "3177412"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lex           1231774") != std::string::npos);
    CHECK(r.out.find("alt           1774123") != std::string::npos);
    CHECK(r.out.find("relex         7741231") != std::string::npos);
    const auto abba = run({"--json", "classify", "abba"});
    const auto j = nlohmann::json::parse(abba.out);
    CHECK(j["flags"]["galois"] == true);
    CHECK(j["flags"]["border-free"] == false);
    CHECK(run({"classify", "a"}).code == 0);
    CHECK(run({"classify", "abab"}).out.find("not primitive") != std::string::npos);
}

TEST_CASE("factor") {
    CHECK(run({"factor", "33132421", "--method", "lyndon"}).out == "(3)(3)(13242)(1)\n");
    CHECK(run({"factor", "33132421", "--method", "vword"}).out == "(33132)(421)\n");
    CHECK(run({"factor", "a"}).out == "(a)\n");
    CHECK(run({"factor", "-"}, "ababab\n").out == "(ab)(ab)(ab)\n");
    CHECK(run({"--alphabet", "0-9", "factor", "33132421", "--method", "family:builtin:vword"}).out ==
          "(33132)(421)\n");
    CHECK(run({"factor", "9211912197194395119119111912", "--method", "lexext:lex"}).out ==
          "(9211)(91219719439511)(9119111912)\n");
    const auto bad = run({"factor", "ababab", "--method", "family:builtin:galois"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("NotUMFF") != std::string::npos);
}

TEST_CASE("build-circ-umff") {
    const std::string path = "cli_test_family.txt";
    {
        std::ofstream f(path);
        f << "alphabet ab\na\nb\nabb\nababb\n";
    }
    const auto r = run({"build-circ-umff", "--family", path, "--cap", "5"});
    CHECK(r.code == 0);
    for (const char* w : {"\naabab", "\nabbbb", "\naaaab", "\nab "})
        CHECK(r.out.find(w) != std::string::npos);
    const auto j = nlohmann::json::parse(run({"build-circ-umff", "--family", path, "--cap", "5", "--emit", "json"}).out);
    CHECK(j["members"].size() == 14);
    CHECK(j["verified"] == true);
    CHECK(j["v"] == 1);
    CHECK(run({"build-circ-umff", "--family", path, "--cap", "25"}).code == 1);
    std::remove(path.c_str());
}

TEST_CASE("verify") {
    const auto r = run({"verify", "--suite", "orders", "--max-len", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(run({"verify", "--suite", "paper"}).code == 0);
    CHECK(run({"verify", "--family", "builtin:lyndon", "--max-len", "6"}).code == 0);
    const auto bf = run({"verify", "--family", "builtin:galois-bf", "--max-len", "6"});
    CHECK(bf.code == 1);
    CHECK(bf.out.find("FAIL  circ-UMFF") != std::string::npos);
    CHECK(run({"verify", "--suite", "orders", "--max-len", "40"}).code == 1);
}

TEST_CASE("transforms") {
    CHECK(run({"bwt", "abab"}).out == "bb$aa\n");
    CHECK(run({"unbwt", "bb$aa"}).out == "abab$\n");
    CHECK(run({"bwt", "a$b"}).code == 1);
    CHECK(run({"unbwt", "abb"}).code == 1);
    CHECK(run({"abwt", "ab"}).out == "ba 0\n");
    CHECK(run({"abwt", "abab"}).code == 1);
}

TEST_CASE("json output round-trips") {
    const auto j = nlohmann::json::parse(run({"--json", "bwt", "banana"}).out);
    CHECK(j["output"] == "annb$aa");
    CHECK(j["command"] == "bwt");
    const auto back = nlohmann::json::parse(run({"--json", "unbwt", j["output"].get<std::string>()}).out);
    CHECK(back["output"] == "banana$");
    const auto f = nlohmann::json::parse(run({"--json", "factor", "33132421"}).out);
    CHECK(f["factors"] == nlohmann::json::array({"3", "3", "13242", "1"}));
    const auto e = run({"--json", "abwt", "abab"});
    CHECK(nlohmann::json::parse(e.out)["error"]["kind"] == "NonPrimitive");
}
