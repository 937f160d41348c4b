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

#include "solid/commands.hpp"

#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "solid/conformance.hpp"
#include "solid/expr.hpp"
#include "solid/laws.hpp"
#include "solid/print.hpp"

namespace solid {
namespace {

// Runs body, mapping parse and evaluation errors to exit codes.
int guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvalError;
  }
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

int cmd_eval(std::string_view expr, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { out << print_canonical(evaluate(expr)) << '\n'; });
}

int cmd_cmp(std::string_view a, std::string_view b, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ExternalNumber x = evaluate(a);
    const ExternalNumber y = evaluate(b);
    const auto c = compare(x, y);
    out << (c < 0 ? "<" : (c > 0 ? ">" : "=")) << '\n';
  });
}

int cmd_dist(std::string_view x, std::string_view y, std::string_view z, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const ExternalNumber vx = evaluate(x);
    const ExternalNumber vy = evaluate(y);
    const ExternalNumber vz = evaluate(z);
    const DistReport r = dist_decide(vx, vy, vz);
    out << "distributive: " << (r.holds ? "yes" : "no") << '\n'
        << "branch: " << to_string(r.branch) << '\n'
        << "x*(y+z) = " << print_canonical(r.lhs) << '\n'
        << "x*y + x*z = " << print_canonical(r.rhs) << '\n'
        << "correction = " << print_canonical(r.correction) << '\n';
  });
}

int cmd_axioms(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const auto profile = GenProfile::by_name(config.profile);
  if (!profile) {
    err << "error: unknown profile '" << config.profile << "'\n";
    return kExitEvalError;
  }
  std::vector<ConformanceReport> reports;
  if (config.property) {
    if (find_property(*config.property) == nullptr) {
      err << "error: unknown property '" << *config.property << "'\n";
      return kExitEvalError;
    }
    reports.push_back(run_property(*config.property, config.trials, config.seed, *profile));
  } else {
    reports = run_all(config.trials, config.seed, *profile);
  }
  bool failed = false;
  for (const auto& r : reports) {
    out << r.to_line() << '\n';
    failed = failed || r.failures > 0;
  }
  return failed ? kExitConformanceFailure : kExitOk;
}

int repl(std::istream& in, std::ostream& out) {
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view cmd = trim(line);
    if (cmd.empty()) continue;
    if (cmd == ":quit") break;
    if (cmd.rfind(":cmp", 0) == 0 || cmd.rfind(":dist", 0) == 0) {
      const bool is_cmp = cmd[1] == 'c';
      const auto args = split(cmd.substr(is_cmp ? 4 : 5), ';');
      if (args.size() != (is_cmp ? 2U : 3U)) {
        out << "error: expected " << (is_cmp ? 2 : 3) << " operands separated by ';'\n";
        continue;
      }
      if (is_cmp) {
        cmd_cmp(args[0], args[1], out, out);
      } else {
        cmd_dist(args[0], args[1], args[2], out, out);
      }
      continue;
    }
    if (cmd.front() == ':') {
      out << "error: unknown command '" << cmd << "'\n";
      continue;
    }
    cmd_eval(cmd, out, out);
  }
  return kExitOk;
}

}  // namespace solid
