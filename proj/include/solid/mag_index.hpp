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

#ifndef SOLID_MAG_INDEX_HPP
#define SOLID_MAG_INDEX_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace solid {

// Index k of the magnitude M_k = {s : val(s) >= k}, taken from the extended
// integers. -inf indexes the maximal magnitude, +inf the zero magnitude {0}.
class MagIndex {
 public:
  enum class Kind : std::uint8_t { kNegInf, kFinite, kPosInf };

  constexpr MagIndex() = default;
  constexpr explicit MagIndex(std::int64_t k) : kind_(Kind::kFinite), value_(k) {}

  static constexpr MagIndex neg_inf() { return MagIndex(Kind::kNegInf); }
  static constexpr MagIndex pos_inf() { return MagIndex(Kind::kPosInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::kNegInf; }

  // Throws std::logic_error unless finite.
  std::int64_t value() const;

  friend constexpr bool operator==(MagIndex a, MagIndex b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::kFinite || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(MagIndex a, MagIndex b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::kFinite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  // Extended addition. +inf absorbs everything (so +inf + -inf = +inf,
  // realizing M * 0 = 0); otherwise -inf absorbs finite values.
  friend constexpr MagIndex operator+(MagIndex a, MagIndex b) {
    if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return MagIndex(a.value_ + b.value_);
  }
  // Shift by a finite amount; infinite indices are fixed points.
  friend constexpr MagIndex operator+(MagIndex a, std::int64_t d) {
    return a.is_finite() ? MagIndex(a.value_ + d) : a;
  }
  friend constexpr MagIndex operator-(MagIndex a, std::int64_t d) {
    return a.is_finite() ? MagIndex(a.value_ - d) : a;
  }

  // "-inf", "+inf" or the decimal value.
  std::string to_string() const;

 private:
  constexpr explicit MagIndex(Kind k) : kind_(k) {}

  Kind kind_ = Kind::kPosInf;
  std::int64_t value_ = 0;
};

}  // namespace solid

#endif  // SOLID_MAG_INDEX_HPP
