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

#include "solid/print.hpp"

#include <ostream>

namespace solid {
namespace {

std::string format_term_body(const Rational& magnitude, std::int64_t exponent) {
  if (exponent == 0) return magnitude.to_string();
  std::string mono = exponent == 1 ? "eps" : "eps^" + std::to_string(exponent);
  if (magnitude.is_one()) return mono;
  return magnitude.to_string() + "*" + mono;
}

LaurentPoly as_laurent(std::int64_t shift, const Poly& p) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    terms.push_back({shift + static_cast<std::int64_t>(i), p[i]});
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

std::string format_terms(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff.sign() < 0;
    const std::string body = format_term_body(negative ? -t.coeff : t.coeff, t.exponent);
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::string format_ratfun(const RatFun& r) {
  if (r.is_polynomial()) return format_terms(r.expand_below(MagIndex::pos_inf()));
  // Scale so the denominator has coprime integer coefficients.
  mpz_class l = 1, g = 0;
  for (const Rational& c : r.den().coeffs()) l = lcm(l, c.denominator());
  for (const Rational& c : r.den().coeffs()) g = gcd(g, (c * Rational(mpq_class(l))).numerator());
  const Rational f(mpq_class(l, g));
  const LaurentPoly num = as_laurent(r.shift(), r.num().scaled(f));
  std::string n = format_terms(num);
  if (num.terms().size() > 1) n = "(" + n + ")";
  return n + "/(" + format_terms(as_laurent(0, r.den().scaled(f))) + ")";
}

std::string print_canonical(const ExternalNumber& x) {
  if (const RatFun* r = x.precise_repr()) return format_ratfun(*r);
  if (x.index().is_neg_inf()) return "Mmax";
  const std::string mag = "M(" + x.index().to_string() + ")";
  if (x.is_magnitude()) return mag;
  return format_terms(x.repr_poly()) + " + " + mag;
}

std::ostream& operator<<(std::ostream& os, const ExternalNumber& x) {
  return os << print_canonical(x);
}

}  // namespace solid
