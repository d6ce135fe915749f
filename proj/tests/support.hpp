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
// Short word literals for tests: letters map a -> 0, digits map 0 -> 0.

#ifndef WORDFORGE_TESTS_SUPPORT_HPP
#define WORDFORGE_TESTS_SUPPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "wordforge/word.hpp"

namespace wordforge::testing {

inline Word L(std::string_view s) {
    Word w;
    for (char c : s) w.push_back(static_cast<Symbol>(c - 'a'));
    return w;
}

inline Word D(std::string_view s) {
    Word w;
    for (char c : s) w.push_back(static_cast<Symbol>(c - '0'));
    return w;
}

inline std::vector<Word> Ls(std::initializer_list<std::string_view> xs) {
    std::vector<Word> out;
    for (auto x : xs) out.push_back(L(x));
    return out;
}

inline std::vector<Word> Ds(std::initializer_list<std::string_view> xs) {
    std::vector<Word> out;
    for (auto x : xs) out.push_back(D(x));
    return out;
}

inline std::string letters(WordView w) {
    std::string s;
    for (Symbol c : w) s += static_cast<char>('a' + c);
    return s;
}

inline std::string digits(WordView w) {
    std::string s;
    for (Symbol c : w) s += static_cast<char>('0' + c);
    return s;
}

}  // namespace wordforge::testing

#endif  // WORDFORGE_TESTS_SUPPORT_HPP
