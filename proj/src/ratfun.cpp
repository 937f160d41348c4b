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

#include "solid/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace solid {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t Poly::low_order() const {
  std::size_t i = 0;
  while (i < c_.size() && c_[i].is_zero()) ++i;
  return i;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + b.scaled(-1); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::scaled(const Rational& r) const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= r;
  return Poly(std::move(c));
}

Poly Poly::lowered(std::size_t n) const {
  return Poly(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(
                                                    std::min(n, c_.size())),
                                    c_.end()));
}

Poly Poly::raised(std::size_t n) const {
  if (is_zero()) return {};
  std::vector<Rational> c(n);
  c.insert(c.end(), c_.begin(), c_.end());
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  if (rem.size() < b.c_.size()) return {Poly(), a};
  std::vector<Rational> quot(rem.size() - b.c_.size() + 1);
  const Rational& lead = b.c_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + b.c_.size() - 1] / lead;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
    quot[k] = q;
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.c_.back());
}

RatFun::RatFun(Rational c) {
  if (!c.is_zero()) num_ = Poly({std::move(c)});
}

RatFun::RatFun(const LaurentPoly& p) {
  if (p.is_zero()) return;
  shift_ = p.terms().front().exponent;
  std::vector<Rational> c(static_cast<std::size_t>(p.max_exponent() - shift_ + 1));
  for (const auto& t : p.terms())
    c[static_cast<std::size_t>(t.exponent - shift_)] = t.coeff;
  num_ = Poly(std::move(c));
}

RatFun RatFun::make(std::int64_t shift, Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  RatFun r;
  if (num.is_zero()) return r;
  const std::size_t tn = num.low_order();
  const std::size_t td = den.low_order();
  shift += static_cast<std::int64_t>(tn) - static_cast<std::int64_t>(td);
  num = num.lowered(tn);
  den = den.lowered(td);
  if (den.degree() > 0) {
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
      num = Poly::divmod(num, g).first;
      den = Poly::divmod(den, g).first;
    }
  }
  const Rational d0 = den[0];
  if (!d0.is_one()) {
    const Rational s = Rational(1) / d0;
    num = num.scaled(s);
    den = den.scaled(s);
  }
  r.shift_ = shift;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = r.num_.scaled(-1);
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t s = std::min(a.shift_, b.shift_);
  const auto ra = static_cast<std::size_t>(a.shift_ - s);
  const auto rb = static_cast<std::size_t>(b.shift_ - s);
  if (a.is_polynomial() && b.is_polynomial())
    return RatFun::make(s, a.num_.raised(ra) + b.num_.raised(rb), a.den_);
  if (a.den_ == b.den_)
    return RatFun::make(s, a.num_.raised(ra) + b.num_.raised(rb), a.den_);
  return RatFun::make(s, a.num_.raised(ra) * b.den_ + b.num_.raised(rb) * a.den_,
                      a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) {
    // Constant terms stay nonzero and the denominator stays 1.
    RatFun r;
    r.shift_ = a.shift_ + b.shift_;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return RatFun::make(a.shift_ + b.shift_, a.num_ * b.num_, a.den_ * b.den_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return make(-shift_, den_, num_);
}

LaurentPoly RatFun::expand_below(MagIndex k) const {
  if (is_zero() || k.is_neg_inf()) return {};
  if (k.is_pos_inf()) {
    if (!is_polynomial())
      throw std::domain_error("infinite expansion: non-polynomial quotient below +inf");
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < num_.coeffs().size(); ++i)
      terms.push_back({shift_ + static_cast<std::int64_t>(i), num_[i]});
    return LaurentPoly::from_terms(std::move(terms));
  }
  const std::int64_t n = k.value() - shift_;
  if (n <= 0) return {};
  // den(0) = 1: c_i = num_i - sum_{m>=1} den_m c_{i-m}.
  std::vector<Rational> c(static_cast<std::size_t>(n));
  const auto& nc = num_.coeffs();
  const auto& dc = den_.coeffs();
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Rational acc = i < nc.size() ? nc[i] : Rational(0);
    for (std::size_t m = 1; m < dc.size() && m <= i; ++m) acc -= dc[m] * c[i - m];
    c[i] = acc;
    terms.push_back({shift_ + static_cast<std::int64_t>(i), acc});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace solid
