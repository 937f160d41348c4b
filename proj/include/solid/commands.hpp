// Copyright 2026 The solidarith Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef SOLID_COMMANDS_HPP
#define SOLID_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace solid {

// Process exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitEvalError = 1,
  kExitParseError = 2,
  kExitConformanceFailure = 3,
};

struct CliConfig {
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  std::optional<std::string> property;
  std::string profile = "default";
};

// Each command writes results to `out` and diagnostics ("error: ...") to
// `err`, returning an ExitCode.
int cmd_eval(std::string_view expr, std::ostream& out, std::ostream& err);
// Prints "<", "=" or ">".
int cmd_cmp(std::string_view a, std::string_view b, std::ostream& out, std::ostream& err);
int cmd_dist(std::string_view x, std::string_view y, std::string_view z, std::ostream& out,
             std::ostream& err);
int cmd_axioms(const CliConfig& config, std::ostream& out, std::ostream& err);

// Line loop: an expression, ":cmp a ; b", ":dist x ; y ; z" or ":quit".
// Errors are reported inline and do not end the loop.
int repl(std::istream& in, std::ostream& out);

}  // namespace solid

#endif  // SOLID_COMMANDS_HPP
