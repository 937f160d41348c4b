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

#ifndef SOLID_EXPR_HPP
#define SOLID_EXPR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "solid/external_number.hpp"

namespace solid {

// Syntax tree of the expression language:
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := "-"? atom ("^" int)?
//   atom   := rational | "eps" | "M" "(" int ")" | "Mmax"
//           | fn "(" expr ")" | "(" expr ")"
//   fn     := "e" | "u" | "inv" | "abs" | "R"
// "^" binds tighter than unary minus; integers after "^" and inside M()
// may carry a sign.
struct Expr {
  enum class Kind { kRational, kEps, kMag, kMaxMag, kNeg, kAdd, kSub, kMul, kDiv, kPow, kCall };
  enum class Fn { kE, kU, kInv, kAbs, kR };

  Kind kind = Kind::kRational;
  Rational number;        // kRational
  std::int64_t integer = 0;  // kMag index, kPow exponent
  Fn fn = Fn::kE;         // kCall
  std::vector<Expr> args;

  // Prefix rendering, e.g. "add(add(1, pow(eps,2)), mag(3))".
  std::string to_string() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Throws ParseError with the byte offset of the offending token.
Expr parse_expr(std::string_view input);

// Throws std::domain_error on undefined operations (inverse or unity of a
// magnitude).
ExternalNumber eval_expr(const Expr& e);

inline ExternalNumber evaluate(std::string_view input) { return eval_expr(parse_expr(input)); }

}  // namespace solid

#endif  // SOLID_EXPR_HPP
