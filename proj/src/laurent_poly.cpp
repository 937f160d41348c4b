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

#include "solid/laurent_poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace solid {

std::int64_t Valuation::value() const {
  if (!value_) throw std::logic_error("valuation of zero is infinite");
  return *value_;
}

LaurentPoly::LaurentPoly(Rational c) {
  if (!c.is_zero()) terms_.push_back({0, std::move(c)});
}

LaurentPoly LaurentPoly::monomial(Rational c, std::int64_t exponent) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.push_back({exponent, std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational LaurentPoly::coeff(std::int64_t exponent) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const Term& t, std::int64_t e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return Rational(0);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (!c.is_zero()) merged.push_back({a->exponent, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::map<std::int64_t, Rational> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.exponent + t.exponent] += s.coeff * t.coeff;
  LaurentPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({e, std::move(c)});
  return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t n) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exponent += n;
  return r;
}

Valuation valuation(const LaurentPoly& a) {
  if (a.is_zero()) return Valuation();
  return Valuation(a.terms().front().exponent);
}

Rational leading_coeff(const LaurentPoly& a) {
  if (a.is_zero()) throw std::domain_error("no leading coefficient: zero polynomial");
  return a.terms().front().coeff;
}

LaurentPoly truncate_below(const LaurentPoly& a, MagIndex k) {
  if (k.is_pos_inf()) return a;
  if (k.is_neg_inf()) return {};
  const std::int64_t bound = k.value();
  std::vector<LaurentPoly::Term> kept;
  for (const auto& t : a.terms()) {
    if (t.exponent >= bound) break;
    kept.push_back(t);
  }
  return LaurentPoly::from_terms(std::move(kept));
}

LaurentPoly series_invert(const LaurentPoly& a, std::int64_t below) {
  if (a.is_zero()) throw std::domain_error("series inversion of zero");
  const std::int64_t v = a.terms().front().exponent;
  if (below <= -v)
    throw std::domain_error("series inversion window is empty");
  // a = eps^v * p with p(0) != 0; b = eps^-v * q, q = 1/p up to degree n-1.
  const std::int64_t n = below + v;
  const Rational& p0 = a.terms().front().coeff;
  std::vector<Rational> q(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    Rational acc = i == 0 ? Rational(1) : Rational(0);
    for (const auto& t : a.terms()) {
      const std::int64_t m = t.exponent - v;
      if (m == 0) continue;
      if (m > i) break;
      acc -= t.coeff * q[static_cast<std::size_t>(i - m)];
    }
    q[static_cast<std::size_t>(i)] = acc / p0;
  }
  std::vector<LaurentPoly::Term> terms;
  for (std::int64_t i = 0; i < n; ++i)
    terms.push_back({i - v, std::move(q[static_cast<std::size_t>(i)])});
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace solid
