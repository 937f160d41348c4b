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

#ifndef SOLID_LAURENT_POLY_HPP
#define SOLID_LAURENT_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solid/mag_index.hpp"
#include "solid/rational.hpp"

namespace solid {

// eps-order of a scalar: an integer, or +inf for zero.
class Valuation {
 public:
  Valuation() = default;  // +inf
  explicit Valuation(std::int64_t v) : value_(v) {}

  bool is_infinite() const { return !value_.has_value(); }
  // Throws std::logic_error for the zero valuation.
  std::int64_t value() const;
  MagIndex as_index() const {
    return value_ ? MagIndex(*value_) : MagIndex::pos_inf();
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::optional<std::int64_t> value_;
};

// Finitely supported Laurent polynomial in the positive infinitesimal eps,
// with exact rational coefficients. Terms are kept sorted by exponent and
// no stored coefficient is zero.
class LaurentPoly {
 public:
  struct Term {
    std::int64_t exponent;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(Rational c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(Rational c, std::int64_t exponent);
  static LaurentPoly eps(std::int64_t exponent = 1) { return monomial(1, exponent); }
  // Accepts unsorted terms with repeated exponents; merges and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(std::int64_t exponent) const;
  // Largest stored exponent. Precondition: nonzero.
  std::int64_t max_exponent() const { return terms_.back().exponent; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // Multiplication by eps^n.
  LaurentPoly shifted(std::int64_t n) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::vector<Term> terms_;
};

Valuation valuation(const LaurentPoly& a);

// Coefficient at the valuation exponent; throws std::domain_error for zero.
Rational leading_coeff(const LaurentPoly& a);

// Keeps exactly the terms with exponent < k.
LaurentPoly truncate_below(const LaurentPoly& a, MagIndex k);

// The unique b supported on [-val(a), below) with a*b = 1 below
// below + val(a). Throws std::domain_error for a = 0 or below <= -val(a).
LaurentPoly series_invert(const LaurentPoly& a, std::int64_t below);

}  // namespace solid

#endif  // SOLID_LAURENT_POLY_HPP
