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

#ifndef SOLID_RATFUN_HPP
#define SOLID_RATFUN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "solid/laurent_poly.hpp"
#include "solid/mag_index.hpp"
#include "solid/rational.hpp"

namespace solid {

// Dense polynomial in eps; coefficient i multiplies eps^i. No trailing
// zero coefficients, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  // Number of leading zero coefficients (the eps-adic order). Precondition: nonzero.
  std::size_t low_order() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& r) const;
  // Division by eps^n; precondition n <= low_order().
  Poly lowered(std::size_t n) const;
  // Multiplication by eps^n.
  Poly raised(std::size_t n) const;

  // Euclidean division; throws std::domain_error on a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic greatest common divisor (zero only when both inputs are zero).
  static Poly gcd(Poly a, Poly b);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Exact element of Q(eps): eps^shift * num / den, with num(0) != 0,
// den(0) = 1 and gcd(num, den) = 1. Zero has an empty numerator.
class RatFun {
 public:
  RatFun() = default;
  RatFun(Rational c);                // NOLINT(google-explicit-constructor)
  RatFun(const LaurentPoly& p);      // NOLINT(google-explicit-constructor)

  // Brings an arbitrary quotient into canonical form.
  // Throws std::domain_error when den is zero.
  static RatFun make(std::int64_t shift, Poly num, Poly den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  std::int64_t shift() const { return shift_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  Valuation valuation() const {
    return is_zero() ? Valuation() : Valuation(shift_);
  }
  // Sign of the leading series coefficient: -1, 0 or 1.
  int sign() const { return is_zero() ? 0 : num_[0].sign(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  // Throws std::domain_error for zero.
  RatFun inverse() const;
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

  // Series expansion truncated below k. k = -inf gives 0; k = +inf is only
  // defined for polynomial quotients and otherwise throws std::domain_error.
  LaurentPoly expand_below(MagIndex k) const;

  friend bool operator==(const RatFun&, const RatFun&) = default;

 private:
  std::int64_t shift_ = 0;
  Poly num_;
  Poly den_{std::vector<Rational>{Rational(1)}};
};

inline LaurentPoly ratfun_expand_below(const RatFun& a, MagIndex k) {
  return a.expand_below(k);
}

}  // namespace solid

#endif  // SOLID_RATFUN_HPP
