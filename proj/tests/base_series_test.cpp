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

#include <stdexcept>

#include "solid/laurent_poly.hpp"
#include "solid/mag_index.hpp"
#include "solid/print.hpp"
#include "solid/ratfun.hpp"
#include "solid/rational.hpp"

using solid::LaurentPoly;
using solid::MagIndex;
using solid::Rational;
using solid::RatFun;

namespace {

LaurentPoly eps(std::int64_t n = 1) { return LaurentPoly::eps(n); }
LaurentPoly c(std::int64_t p, std::int64_t q = 1) { return LaurentPoly(Rational(p, q)); }

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational::parse("-7/21").to_string() == "-1/3");
  CHECK(Rational::parse("12").is_integer());
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("magnitude index addition") {
  const MagIndex pos = MagIndex::pos_inf(), neg = MagIndex::neg_inf();
  CHECK(MagIndex(2) + MagIndex(3) == MagIndex(5));
  CHECK(neg + MagIndex(4) == neg);
  CHECK(pos + MagIndex(4) == pos);
  CHECK(pos + neg == pos);
  CHECK(neg + pos == pos);
  CHECK(neg < MagIndex(-100));
  CHECK(MagIndex(100) < pos);
  CHECK_THROWS_AS(pos.value(), std::logic_error);
}

TEST_CASE("poly_add") {
  CHECK((c(1) + eps()) + (-eps()) == c(1));
  CHECK(LaurentPoly() + LaurentPoly::monomial(Rational(3, 2), -1) ==
        LaurentPoly::monomial(Rational(3, 2), -1));
  CHECK(solid::format_terms((c(1) + eps()) + (c(1) + eps(2))) == "2 + eps + eps^2");
}

TEST_CASE("poly_mul") {
  CHECK((c(1) + eps()) * (c(1) - eps()) == c(1) - eps(2));
  CHECK(eps(2) * eps(-2) == c(1));
  CHECK((LaurentPoly() * (c(1) + eps())).is_zero());
}

TEST_CASE("valuation and leading coefficient") {
  CHECK(solid::valuation(eps(2) + LaurentPoly::monomial(2, 3)).value() == 2);
  CHECK(solid::valuation(c(5)).value() == 0);
  CHECK(solid::valuation(LaurentPoly()).is_infinite());
  CHECK(solid::leading_coeff(-eps() + eps(2)) == Rational(-1));
  CHECK(solid::leading_coeff(c(7, 3)) == Rational(7, 3));
  CHECK_THROWS_AS(solid::leading_coeff(LaurentPoly()), std::domain_error);
}

TEST_CASE("truncate_below") {
  const LaurentPoly p = c(1) + eps() + eps(2);
  CHECK(solid::truncate_below(p, MagIndex(2)) == c(1) + eps());
  CHECK(solid::truncate_below(c(1) + eps(), MagIndex::pos_inf()) == c(1) + eps());
  CHECK(solid::truncate_below(c(1) + eps(), MagIndex::neg_inf()).is_zero());
}

TEST_CASE("series_invert") {
  CHECK(solid::series_invert(c(1) + eps(), 3) == c(1) - eps() + eps(2));
  CHECK(solid::series_invert(eps(), 0) == eps(-1));
  CHECK(solid::series_invert(c(2), 1) == c(1, 2));
  CHECK_THROWS_AS(solid::series_invert(LaurentPoly(), 3), std::domain_error);
}

TEST_CASE("series_invert multiplies back to one below the window") {
  // Oracle: a * inv(a) = 1 + (terms at or above below + v).
  const LaurentPoly samples[] = {c(1) + eps(), c(2) - eps(2), -eps(-1) + c(3) + eps(2),
                                 LaurentPoly::monomial(Rational(1, 2), 2) + eps(3)};
  for (const LaurentPoly& a : samples) {
    const std::int64_t v = solid::valuation(a).value();
    for (std::int64_t below = -v + 1; below <= -v + 6; ++below) {
      const LaurentPoly prod = a * solid::series_invert(a, below);
      CHECK(solid::truncate_below(prod, MagIndex(below + v)) == c(1));
    }
  }
}

TEST_CASE("ratfun arithmetic") {
  const RatFun q = RatFun(c(1) + eps()).inverse();
  CHECK_FALSE(q.is_polynomial());
  CHECK(solid::format_ratfun(q) == "1/(1 + eps)");
  CHECK((RatFun(Rational(1)) + RatFun(Rational(-1))).is_zero());
  CHECK(RatFun(eps()) * RatFun(eps()).inverse() == RatFun(Rational(1)));
  CHECK(q * RatFun(c(1) + eps()) == RatFun(Rational(1)));
  CHECK((q + q) == RatFun(c(2)) / RatFun(c(1) + eps()));
  CHECK_THROWS_AS(RatFun().inverse(), std::domain_error);
}

TEST_CASE("ratfun_expand_below") {
  const RatFun q = RatFun(c(1) - eps()).inverse();
  CHECK(solid::ratfun_expand_below(q, MagIndex(3)) == c(1) + eps() + eps(2));
  CHECK(solid::ratfun_expand_below(RatFun(c(1) + eps()), MagIndex(1)) == c(1));
  CHECK(solid::ratfun_expand_below(RatFun(), MagIndex(5)).is_zero());
  CHECK(solid::ratfun_expand_below(q, MagIndex::neg_inf()).is_zero());
  CHECK_THROWS_AS(solid::ratfun_expand_below(q, MagIndex::pos_inf()), std::domain_error);
}

TEST_CASE("ratfun expansion agrees with multiply-back") {
  const RatFun den = RatFun(c(2) + LaurentPoly::monomial(3, 1) - eps(3));
  const RatFun q = RatFun(eps(-1) + c(1)) / den;
  for (std::int64_t k = -1; k <= 6; ++k) {
    const LaurentPoly s = solid::ratfun_expand_below(q, MagIndex(k));
    const LaurentPoly back = s * (c(2) + LaurentPoly::monomial(3, 1) - eps(3));
    CHECK(solid::truncate_below(back, MagIndex(k)) ==
          solid::truncate_below(eps(-1) + c(1), MagIndex(k)));
  }
}

TEST_CASE("ratfun sign") {
  CHECK(RatFun(Rational(1)).sign() > 0);
  CHECK(RatFun(-eps()).sign() < 0);
  CHECK(RatFun().sign() == 0);
  CHECK((RatFun(eps(-1)) - RatFun(c(1) - eps()).inverse()).sign() > 0);
}
