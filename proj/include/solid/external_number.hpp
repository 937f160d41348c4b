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

#ifndef SOLID_EXTERNAL_NUMBER_HPP
#define SOLID_EXTERNAL_NUMBER_HPP

#include <compare>
#include <cstdint>
#include <variant>

#include "solid/laurent_poly.hpp"
#include "solid/mag_index.hpp"
#include "solid/ratfun.hpp"

namespace solid {

// The convex subgroup M_k = {s : val(s) >= k}. Ordered by inclusion, so a
// larger index is a smaller magnitude.
class Magnitude {
 public:
  constexpr Magnitude() = default;  // {0}
  constexpr explicit Magnitude(MagIndex k) : index_(k) {}
  constexpr explicit Magnitude(std::int64_t k) : index_(k) {}

  static constexpr Magnitude zero() { return Magnitude(MagIndex::pos_inf()); }
  static constexpr Magnitude max() { return Magnitude(MagIndex::neg_inf()); }

  constexpr MagIndex index() const { return index_; }

  friend constexpr bool operator==(Magnitude, Magnitude) = default;
  friend constexpr std::strong_ordering operator<=>(Magnitude a, Magnitude b) {
    return b.index_ <=> a.index_;
  }
  // Absorption: the sum is the wider of the two.
  friend constexpr Magnitude operator+(Magnitude a, Magnitude b) {
    return Magnitude(a.index_ < b.index_ ? a.index_ : b.index_);
  }

 private:
  MagIndex index_ = MagIndex::pos_inf();
};

enum class SignClass { kNegative, kMagnitudeZero, kPositive };

// External number a + M_k in canonical form:
//  - k = +inf: a is an exact element of Q(eps) (the precise elements),
//  - k finite: a is a Laurent polynomial with every exponent below k,
//  - k = -inf: a = 0.
// Equality is structural equality of canonical forms.
class ExternalNumber {
 public:
  ExternalNumber() = default;  // precise zero

  static ExternalNumber precise(RatFun a);
  static ExternalNumber of(Magnitude m);
  static ExternalNumber zero() { return {}; }
  static ExternalNumber one() { return precise(RatFun(Rational(1))); }
  static ExternalNumber max_magnitude() { return of(Magnitude::max()); }

  // Quotient map: truncates (or expands) the representative below m.
  static ExternalNumber canonicalize(const LaurentPoly& repr, Magnitude m);
  static ExternalNumber canonicalize(const RatFun& repr, Magnitude m);

  MagIndex index() const { return index_; }
  Magnitude mag() const { return Magnitude(index_); }

  bool is_precise() const { return index_.is_pos_inf(); }
  bool is_magnitude() const;
  bool is_zeroless() const { return !is_magnitude(); }

  // The representative as an exact scalar.
  RatFun repr_exact() const;
  // The representative as a Laurent polynomial; throws std::domain_error
  // for precise non-polynomial values.
  LaurentPoly repr_poly() const;
  Valuation repr_valuation() const;
  // Precise representative, when this value is precise.
  const RatFun* precise_repr() const { return std::get_if<RatFun>(&repr_); }

  friend bool operator==(const ExternalNumber&, const ExternalNumber&) = default;

 private:
  ExternalNumber(std::variant<RatFun, LaurentPoly> repr, MagIndex k)
      : repr_(std::move(repr)), index_(k) {}

  std::variant<RatFun, LaurentPoly> repr_;
  MagIndex index_ = MagIndex::pos_inf();
};

ExternalNumber operator+(const ExternalNumber& x, const ExternalNumber& y);
ExternalNumber operator-(const ExternalNumber& x);
inline ExternalNumber operator-(const ExternalNumber& x, const ExternalNumber& y) {
  return x + (-y);
}
ExternalNumber operator*(const ExternalNumber& x, const ExternalNumber& y);

// Total order. Non-absorbed representative differences decide by sign;
// otherwise the narrower element is the smaller one.
std::strong_ordering compare(const ExternalNumber& x, const ExternalNumber& y);
inline std::strong_ordering operator<=>(const ExternalNumber& x,
                                        const ExternalNumber& y) {
  return compare(x, y);
}

// e(x).
inline Magnitude magnitude_of(const ExternalNumber& x) { return x.mag(); }
inline ExternalNumber neutral(const ExternalNumber& x) {
  return ExternalNumber::of(x.mag());
}

// u(x); throws std::domain_error on magnitudes.
ExternalNumber unity_of(const ExternalNumber& x);
// x^-1; throws std::domain_error on magnitudes.
ExternalNumber inverse(const ExternalNumber& x);
inline ExternalNumber operator/(const ExternalNumber& x, const ExternalNumber& y) {
  return x * inverse(y);
}
// x^n for any integer n; negative powers go through the inverse.
ExternalNumber power(const ExternalNumber& x, std::int64_t n);

// R(x): e(u(x)) for zeroless x, the maximal magnitude for magnitudes.
Magnitude rel_uncertainty(const ExternalNumber& x);

ExternalNumber abs(const ExternalNumber& x);
SignClass classify(const ExternalNumber& x);

struct Decomposition {
  ExternalNumber precise;
  Magnitude mag;
};
Decomposition decompose(const ExternalNumber& x);

}  // namespace solid

#endif  // SOLID_EXTERNAL_NUMBER_HPP
