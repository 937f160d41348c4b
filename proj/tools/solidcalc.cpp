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

// solidcalc: evaluate, compare and check external-number expressions.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "solid/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic on external numbers a + M(k) over Q(eps)"};
  app.require_subcommand(1);

  std::string a, b, c;
  solid::CliConfig config;

  auto* eval = app.add_subcommand("eval", "Print the canonical form of an expression");
  eval->add_option("expr", a)->required();
  auto* cmp = app.add_subcommand("cmp", "Compare two expressions (<, = or >)");
  cmp->add_option("lhs", a)->required();
  cmp->add_option("rhs", b)->required();
  auto* dist = app.add_subcommand("dist", "Decide whether x(y+z) = xy + xz");
  dist->add_option("x", a)->required();
  dist->add_option("y", b)->required();
  dist->add_option("z", c)->required();
  auto* axioms = app.add_subcommand("axioms", "Run the randomized conformance suite");
  axioms->add_option("--trials", config.trials, "Trials per property")->capture_default_str();
  axioms->add_option("--seed", config.seed, "Base seed")->capture_default_str();
  axioms->add_option("--property", config.property, "Run a single property by id");
  axioms->add_option("--profile", config.profile,
                     "Generator profile: default, magnitudes, precise, extremes, opposite")
      ->capture_default_str();
  auto* repl = app.add_subcommand("repl", "Read expressions from stdin until :quit");

  CLI11_PARSE(app, argc, argv);

  if (eval->parsed()) return solid::cmd_eval(a, std::cout, std::cerr);
  if (cmp->parsed()) return solid::cmd_cmp(a, b, std::cout, std::cerr);
  if (dist->parsed()) return solid::cmd_dist(a, b, c, std::cout, std::cerr);
  if (axioms->parsed()) return solid::cmd_axioms(config, std::cout, std::cerr);
  if (repl->parsed()) return solid::repl(std::cin, std::cout);
  return 0;
}
