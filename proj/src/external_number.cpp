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

#include "solid/external_number.hpp"

#include <algorithm>
#include <stdexcept>

namespace solid {
namespace {

MagIndex min3(MagIndex a, MagIndex b, MagIndex c) { return std::min({a, b, c}); }

// Laurent expansion of a representative below k (k finite).
LaurentPoly series_below(const ExternalNumber& x, MagIndex k) {
  if (const RatFun* r = x.precise_repr()) return r->expand_below(k);
  return truncate_below(x.repr_poly(), k);
}

}  // namespace

ExternalNumber ExternalNumber::precise(RatFun a) {
  return ExternalNumber(std::move(a), MagIndex::pos_inf());
}

ExternalNumber ExternalNumber::of(Magnitude m) {
  if (m.index().is_pos_inf()) return {};
  return ExternalNumber(LaurentPoly(), m.index());
}

ExternalNumber ExternalNumber::canonicalize(const LaurentPoly& repr, Magnitude m) {
  const MagIndex k = m.index();
  if (k.is_pos_inf()) return precise(RatFun(repr));
  return ExternalNumber(truncate_below(repr, k), k);
}

ExternalNumber ExternalNumber::canonicalize(const RatFun& repr, Magnitude m) {
  const MagIndex k = m.index();
  if (k.is_pos_inf()) return precise(repr);
  return ExternalNumber(repr.expand_below(k), k);
}

bool ExternalNumber::is_magnitude() const {
  return std::visit([](const auto& r) { return r.is_zero(); }, repr_);
}

RatFun ExternalNumber::repr_exact() const {
  if (const RatFun* r = std::get_if<RatFun>(&repr_)) return *r;
  return RatFun(std::get<LaurentPoly>(repr_));
}

LaurentPoly ExternalNumber::repr_poly() const {
  if (const LaurentPoly* p = std::get_if<LaurentPoly>(&repr_)) return *p;
  return std::get<RatFun>(repr_).expand_below(MagIndex::pos_inf());
}

Valuation ExternalNumber::repr_valuation() const {
  if (const RatFun* r = std::get_if<RatFun>(&repr_)) return r->valuation();
  return valuation(std::get<LaurentPoly>(repr_));
}

ExternalNumber operator+(const ExternalNumber& x, const ExternalNumber& y) {
  const MagIndex k = std::min(x.index(), y.index());
  if (k.is_pos_inf()) return ExternalNumber::precise(*x.precise_repr() + *y.precise_repr());
  return ExternalNumber::canonicalize(series_below(x, k) + series_below(y, k), Magnitude(k));
}

ExternalNumber operator-(const ExternalNumber& x) {
  if (const RatFun* r = x.precise_repr()) return ExternalNumber::precise(-*r);
  return ExternalNumber::canonicalize(-x.repr_poly(), x.mag());
}

ExternalNumber operator*(const ExternalNumber& x, const ExternalNumber& y) {
  const MagIndex va = x.repr_valuation().as_index();
  const MagIndex vb = y.repr_valuation().as_index();
  const MagIndex k = min3(x.index() + vb, y.index() + va, x.index() + y.index());
  if (k.is_pos_inf())
    return ExternalNumber::precise(x.repr_exact() * y.repr_exact());
  if (x.is_magnitude() || y.is_magnitude() || k.is_neg_inf())
    return ExternalNumber::of(Magnitude(k));
  // Terms of a at or above k - val(b) only reach exponents >= k.
  const LaurentPoly a = series_below(x, k - vb.value());
  const LaurentPoly b = series_below(y, k - va.value());
  return ExternalNumber::canonicalize(a * b, Magnitude(k));
}

std::strong_ordering compare(const ExternalNumber& x, const ExternalNumber& y) {
  const MagIndex m = std::min(x.index(), y.index());
  int sign = 0;
  MagIndex vd = MagIndex::pos_inf();
  if (x.is_precise() || y.is_precise()) {
    const RatFun d = y.repr_exact() - x.repr_exact();
    vd = d.valuation().as_index();
    sign = d.sign();
  } else {
    const LaurentPoly d = y.repr_poly() - x.repr_poly();
    if (!d.is_zero()) {
      vd = valuation(d).as_index();
      sign = leading_coeff(d).sign();
    }
  }
  if (sign != 0 && vd < m)
    return sign > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  // Difference absorbed: the narrower element is below the wider one.
  return y.index() <=> x.index();
}

ExternalNumber unity_of(const ExternalNumber& x) {
  if (x.is_magnitude()) throw std::domain_error("unity undefined for magnitudes");
  if (x.is_precise()) return ExternalNumber::one();
  const std::int64_t v = x.repr_valuation().value();
  return ExternalNumber::canonicalize(LaurentPoly(Rational(1)), Magnitude(x.index() - v));
}

ExternalNumber inverse(const ExternalNumber& x) {
  if (x.is_magnitude()) throw std::domain_error("inverse undefined for magnitudes");
  if (const RatFun* r = x.precise_repr()) return ExternalNumber::precise(r->inverse());
  const std::int64_t v = x.repr_valuation().value();
  const MagIndex k = x.index() - 2 * v;
  return ExternalNumber::canonicalize(series_invert(x.repr_poly(), k.value()), Magnitude(k));
}

ExternalNumber power(const ExternalNumber& x, std::int64_t n) {
  if (n < 0) return power(inverse(x), -n);
  ExternalNumber r = ExternalNumber::one();
  ExternalNumber base = x;
  for (; n > 0; n >>= 1) {
    if (n & 1) r = r * base;
    if (n > 1) base = base * base;
  }
  return r;
}

Magnitude rel_uncertainty(const ExternalNumber& x) {
  if (x.is_magnitude()) return Magnitude::max();
  if (x.is_precise()) return Magnitude::zero();
  return Magnitude(x.index() - x.repr_valuation().value());
}

ExternalNumber abs(const ExternalNumber& x) {
  return compare(neutral(x), x) == std::strong_ordering::greater ? -x : x;
}

SignClass classify(const ExternalNumber& x) {
  if (x.is_magnitude()) return SignClass::kMagnitudeZero;
  return compare(neutral(x), x) == std::strong_ordering::greater ? SignClass::kNegative
                                                                  : SignClass::kPositive;
}

Decomposition decompose(const ExternalNumber& x) {
  return {ExternalNumber::precise(x.repr_exact()), x.mag()};
}

}  // namespace solid
