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

#include "solid/expr.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace solid {
namespace {

struct Token {
  enum class Kind { kNumber, kIdent, kSymbol, kEnd };
  Kind kind;
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    const unsigned char c = static_cast<unsigned char>(in[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      const std::size_t start = i;
      while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) ++i;
      out.push_back({Token::Kind::kNumber, in.substr(start, i - start), start});
    } else if (std::isalpha(c)) {
      const std::size_t start = i;
      while (i < in.size() && std::isalpha(static_cast<unsigned char>(in[i]))) ++i;
      out.push_back({Token::Kind::kIdent, in.substr(start, i - start), start});
    } else if (std::string_view("+-*/^()").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Kind::kSymbol, in.substr(i, 1), i});
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::Kind::kEnd, {}, in.size()});
  return out;
}

Expr node(Expr::Kind k, std::vector<Expr> args = {}) {
  Expr e;
  e.kind = k;
  e.args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view in) : toks_(lex(in)) {}

  Expr parse() {
    Expr e = expr();
    if (peek().kind != Token::Kind::kEnd) fail("unexpected trailing input");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool is_symbol(char c, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Token::Kind::kSymbol && t.text[0] == c;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(peek().offset, what); }
  void expect(char c) {
    if (!is_symbol(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Expr expr() {
    Expr lhs = term();
    while (is_symbol('+') || is_symbol('-')) {
      const auto k = is_symbol('+') ? Expr::Kind::kAdd : Expr::Kind::kSub;
      ++pos_;
      lhs = node(k, {std::move(lhs), term()});
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (is_symbol('*') || is_symbol('/')) {
      const auto k = is_symbol('*') ? Expr::Kind::kMul : Expr::Kind::kDiv;
      ++pos_;
      lhs = node(k, {std::move(lhs), factor()});
    }
    return lhs;
  }

  Expr factor() {
    const bool negate = is_symbol('-');
    if (negate) ++pos_;
    Expr base = atom();
    if (is_symbol('^')) {
      ++pos_;
      Expr p = node(Expr::Kind::kPow, {std::move(base)});
      p.integer = signed_int();
      base = std::move(p);
    }
    return negate ? node(Expr::Kind::kNeg, {std::move(base)}) : base;
  }

  std::int64_t signed_int() {
    bool neg = false;
    if (is_symbol('-')) {
      neg = true;
      ++pos_;
    }
    if (peek().kind != Token::Kind::kNumber) fail("expected integer");
    std::int64_t v = 0;
    const auto text = peek().text;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) fail("integer out of range");
    ++pos_;
    return neg ? -v : v;
  }

  Expr atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::kNumber) {
      std::string text(t.text);
      ++pos_;
      if (is_symbol('/') && peek(1).kind == Token::Kind::kNumber) {
        text += '/';
        text += peek(1).text;
        if (peek(1).text.find_first_not_of('0') == std::string_view::npos)
          throw ParseError(peek(1).offset, "zero denominator");
        pos_ += 2;
      }
      Expr e = node(Expr::Kind::kRational);
      e.number = Rational::parse(text);
      return e;
    }
    if (t.kind == Token::Kind::kIdent) {
      const std::string_view id = t.text;
      ++pos_;
      if (id == "eps") return node(Expr::Kind::kEps);
      if (id == "Mmax") return node(Expr::Kind::kMaxMag);
      if (id == "M") {
        expect('(');
        Expr e = node(Expr::Kind::kMag);
        e.integer = signed_int();
        expect(')');
        return e;
      }
      Expr::Fn fn;
      if (id == "e")
        fn = Expr::Fn::kE;
      else if (id == "u")
        fn = Expr::Fn::kU;
      else if (id == "inv")
        fn = Expr::Fn::kInv;
      else if (id == "abs")
        fn = Expr::Fn::kAbs;
      else if (id == "R")
        fn = Expr::Fn::kR;
      else
        throw ParseError(t.offset, "unknown identifier '" + std::string(id) + "'");
      expect('(');
      Expr e = node(Expr::Kind::kCall, {expr()});
      e.fn = fn;
      expect(')');
      return e;
    }
    if (is_symbol('(')) {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    fail(t.kind == Token::Kind::kEnd ? "unexpected end of input" : "expected operand");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string_view fn_name(Expr::Fn f) {
  switch (f) {
    case Expr::Fn::kE:
      return "e";
    case Expr::Fn::kU:
      return "u";
    case Expr::Fn::kInv:
      return "inv";
    case Expr::Fn::kAbs:
      return "abs";
    case Expr::Fn::kR:
      break;
  }
  return "R";
}

}  // namespace

std::string Expr::to_string() const {
  auto bin = [this](const char* name) {
    return std::string(name) + "(" + args[0].to_string() + ", " + args[1].to_string() + ")";
  };
  switch (kind) {
    case Kind::kRational:
      return number.to_string();
    case Kind::kEps:
      return "eps";
    case Kind::kMag:
      return "mag(" + std::to_string(integer) + ")";
    case Kind::kMaxMag:
      return "mmax";
    case Kind::kNeg:
      return "neg(" + args[0].to_string() + ")";
    case Kind::kAdd:
      return bin("add");
    case Kind::kSub:
      return bin("sub");
    case Kind::kMul:
      return bin("mul");
    case Kind::kDiv:
      return bin("div");
    case Kind::kPow:
      return "pow(" + args[0].to_string() + "," + std::to_string(integer) + ")";
    case Kind::kCall:
      break;
  }
  return std::string(fn_name(fn)) + "(" + args[0].to_string() + ")";
}

Expr parse_expr(std::string_view input) { return Parser(input).parse(); }

ExternalNumber eval_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kRational:
      return ExternalNumber::precise(RatFun(e.number));
    case Expr::Kind::kEps:
      return ExternalNumber::precise(RatFun(LaurentPoly::eps()));
    case Expr::Kind::kMag:
      return ExternalNumber::of(Magnitude(e.integer));
    case Expr::Kind::kMaxMag:
      return ExternalNumber::max_magnitude();
    case Expr::Kind::kNeg:
      return -eval_expr(e.args[0]);
    case Expr::Kind::kAdd:
      return eval_expr(e.args[0]) + eval_expr(e.args[1]);
    case Expr::Kind::kSub:
      return eval_expr(e.args[0]) - eval_expr(e.args[1]);
    case Expr::Kind::kMul:
      return eval_expr(e.args[0]) * eval_expr(e.args[1]);
    case Expr::Kind::kDiv:
      return eval_expr(e.args[0]) / eval_expr(e.args[1]);
    case Expr::Kind::kPow:
      return power(eval_expr(e.args[0]), e.integer);
    case Expr::Kind::kCall:
      break;
  }
  const ExternalNumber arg = eval_expr(e.args[0]);
  switch (e.fn) {
    case Expr::Fn::kE:
      return neutral(arg);
    case Expr::Fn::kU:
      return unity_of(arg);
    case Expr::Fn::kInv:
      return inverse(arg);
    case Expr::Fn::kAbs:
      return abs(arg);
    case Expr::Fn::kR:
      break;
  }
  return ExternalNumber::of(rel_uncertainty(arg));
}

}  // namespace solid
