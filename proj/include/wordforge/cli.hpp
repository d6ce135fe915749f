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
// The `wordforge` command line, callable in-process for testing.

#ifndef WORDFORGE_CLI_HPP
#define WORDFORGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wordforge {

/* Runs one command. `args` excludes the program name. Returns 0 on success,
 * 1 on a library error or failed verification, 2 on a usage error. */
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wordforge

#endif  // WORDFORGE_CLI_HPP
