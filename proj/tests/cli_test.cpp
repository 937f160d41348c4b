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

#include <doctest.h>

#include <sstream>
#include <string>

#include "solid/commands.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <typename F>
Run capture(F f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cmd_eval") {
  auto r = capture([](auto& o, auto& e) { return solid::cmd_eval("u(eps+M(3))", o, e); });
  CHECK(r.code == solid::kExitOk);
  CHECK(r.out == "1 + M(2)\n");
  r = capture([](auto& o, auto& e) { return solid::cmd_eval("inv(M(2))", o, e); });
  CHECK(r.code == solid::kExitEvalError);
  CHECK(r.err == "error: inverse undefined for magnitudes\n");
  r = capture([](auto& o, auto& e) { return solid::cmd_eval("1 + + 2", o, e); });
  CHECK(r.code == solid::kExitParseError);
  CHECK(r.err.rfind("error: syntax error at offset 4", 0) == 0);
}

TEST_CASE("cmd_cmp") {
  auto r = capture([](auto& o, auto& e) { return solid::cmd_cmp("0", "1", o, e); });
  CHECK(r.out == "<\n");
  r = capture([](auto& o, auto& e) { return solid::cmd_cmp("1+M(1)", "1+eps+M(1)", o, e); });
  CHECK(r.out == "=\n");
  r = capture([](auto& o, auto& e) { return solid::cmd_cmp("M(0)", "M(1)", o, e); });
  CHECK(r.out == ">\n");
}

TEST_CASE("cmd_dist report") {
  auto r = capture([](auto& o, auto& e) { return solid::cmd_dist("1+M(1)", "1", "-1", o, e); });
  CHECK(r.code == solid::kExitOk);
  CHECK(r.out ==
        "distributive: no\nbranch: none\nx*(y+z) = 0\nx*y + x*z = M(1)\ncorrection = M(1)\n");
  r = capture([](auto& o, auto& e) { return solid::cmd_dist("1+M(1)", "1", "1", o, e); });
  CHECK(r.out.rfind("distributive: yes\nbranch: magnitude\n", 0) == 0);
  r = capture(
      [](auto& o, auto& e) { return solid::cmd_dist("1+M(2)", "1+M(1)", "-1+M(1)", o, e); });
  CHECK(r.out.rfind("distributive: yes\nbranch: relative\n", 0) == 0);
}

TEST_CASE("cmd_axioms") {
  solid::CliConfig config;
  config.trials = 200;
  config.property = "A22";
  auto r = capture([&](auto& o, auto& e) { return solid::cmd_axioms(config, o, e); });
  CHECK(r.code == solid::kExitOk);
  CHECK(r.out == "A22 trials=200 failures=0\n");
  config.property = "A99";
  r = capture([&](auto& o, auto& e) { return solid::cmd_axioms(config, o, e); });
  CHECK(r.code == solid::kExitEvalError);
  config.property.reset();
  config.profile = "bogus";
  r = capture([&](auto& o, auto& e) { return solid::cmd_axioms(config, o, e); });
  CHECK(r.code == solid::kExitEvalError);
}

TEST_CASE("repl") {
  std::istringstream in(
      "1 + eps + M(2)\n"
      "\n"
      ":cmp 0 ; 1\n"
      ":dist 1+M(1) ; 1 ; -1\n"
      "inv(M(1))\n"
      ":cmp 1\n"
      ":bogus\n"
      ":quit\n"
      "2\n");
  std::ostringstream out;
  CHECK(solid::repl(in, out) == 0);
  CHECK(out.str() ==
        "1 + eps + M(2)\n"
        "<\n"
        "distributive: no\nbranch: none\nx*(y+z) = 0\nx*y + x*z = M(1)\ncorrection = M(1)\n"
        "error: inverse undefined for magnitudes\n"
        "error: expected 2 operands separated by ';'\n"
        "error: unknown command ':bogus'\n");
}
