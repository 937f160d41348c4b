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

// Set-representative oracle for sums and products of external numbers.
//
// An operand a + M_k is sampled as the representatives a, a + eps^k and
// a - eps^k (eps^-50 stands in for the unbounded M_{-inf}; M_{+inf} = {0}
// contributes no offset). The operation is applied to every pair of
// representatives with plain coefficient maps, and the smallest valuation of
// (sampled result - base result) is the index of the result. Nothing from
// the library beyond Rational is used.

#ifndef SOLID_TESTS_ORACLE_HPP
#define SOLID_TESTS_ORACLE_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "solid/external_number.hpp"
#include "solid/rational.hpp"

namespace oracle {

using Coeffs = std::map<std::int64_t, solid::Rational>;  // exponent -> nonzero coefficient

constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kHuge = 50;       // M_{-inf} sample is eps^-kHuge
constexpr std::int64_t kHugeFloor = -40; // differences below this mean -inf

struct Value {
  Coeffs repr;
  std::int64_t index = kPosInf;
  friend auto operator<=>(const Value&, const Value&) = default;
};

inline void add_term(Coeffs& c, std::int64_t e, const solid::Rational& r) {
  auto [it, fresh] = c.emplace(e, r);
  if (!fresh) {
    it->second += r;
    if (it->second.is_zero()) c.erase(it);
  }
}

inline Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs out = a;
  for (const auto& [e, r] : b) add_term(out, e, r);
  return out;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  Coeffs out;
  for (const auto& [ea, ra] : a)
    for (const auto& [eb, rb] : b) add_term(out, ea + eb, ra * rb);
  return out;
}

// Canonical form: drop exponents at or above the index.
inline Value normalize(Coeffs c, std::int64_t index) {
  if (index == kNegInf) return {{}, kNegInf};
  if (index != kPosInf) c.erase(c.lower_bound(index), c.end());
  return {std::move(c), index};
}

inline std::vector<Coeffs> offsets(std::int64_t index) {
  if (index == kPosInf) return {{}};
  const std::int64_t e = index == kNegInf ? -kHuge : index;
  return {{}, {{e, solid::Rational(1)}}, {{e, solid::Rational(-1)}}};
}

template <typename Op>
Value apply(const Value& x, const Value& y, Op op) {
  const Coeffs base = op(x.repr, y.repr);
  std::int64_t index = kPosInf;
  for (const Coeffs& s : offsets(x.index)) {
    for (const Coeffs& t : offsets(y.index)) {
      Coeffs diff = op(add(x.repr, s), add(y.repr, t));
      for (const auto& [e, r] : base) add_term(diff, e, -r);
      if (!diff.empty()) index = std::min(index, diff.begin()->first);
    }
  }
  if (index != kPosInf && index < kHugeFloor) index = kNegInf;
  return normalize(base, index);
}

inline Value add(const Value& x, const Value& y) {
  return apply(x, y, [](const Coeffs& a, const Coeffs& b) { return add(a, b); });
}
inline Value mul(const Value& x, const Value& y) {
  return apply(x, y, [](const Coeffs& a, const Coeffs& b) { return mul(a, b); });
}

// Every canonical value with coefficients in {-2..2} on exponents {-1..2}
// and magnitude index in {0, 1, 2, +inf, -inf}.
inline std::vector<Value> grid() {
  const std::vector<std::int64_t> indices = {0, 1, 2, kPosInf, kNegInf};
  std::set<Value> seen;
  for (int code = 0; code < 625; ++code) {
    Coeffs c;
    int rest = code;
    for (std::int64_t e = -1; e <= 2; ++e, rest /= 5) {
      const int coeff = rest % 5 - 2;
      if (coeff != 0) c.emplace(e, solid::Rational(coeff));
    }
    for (std::int64_t k : indices) seen.insert(normalize(c, k));
  }
  return {seen.begin(), seen.end()};
}

inline solid::MagIndex to_index(std::int64_t k) {
  if (k == kPosInf) return solid::MagIndex::pos_inf();
  if (k == kNegInf) return solid::MagIndex::neg_inf();
  return solid::MagIndex(k);
}

inline solid::ExternalNumber to_external(const Value& v) {
  std::vector<solid::LaurentPoly::Term> terms;
  for (const auto& [e, r] : v.repr) terms.push_back({e, r});
  return solid::ExternalNumber::canonicalize(solid::LaurentPoly::from_terms(std::move(terms)),
                                             solid::Magnitude(to_index(v.index)));
}

inline bool matches(const solid::ExternalNumber& x, const Value& v) {
  return x == to_external(v);
}

}  // namespace oracle

#endif  // SOLID_TESTS_ORACLE_HPP
