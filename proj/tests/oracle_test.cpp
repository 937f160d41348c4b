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

#include "oracle.hpp"
#include "test_util.hpp"

namespace {

oracle::Value val(std::string_view s) {
  const solid::ExternalNumber x = ev(s);
  oracle::Value v;
  const solid::LaurentPoly a = x.repr_poly();
  for (const auto& t : a.terms()) v.repr.emplace(t.exponent, t.coeff);
  const solid::MagIndex k = x.index();
  v.index = k.is_pos_inf() ? oracle::kPosInf : (k.is_neg_inf() ? oracle::kNegInf : k.value());
  return v;
}

}  // namespace

TEST_CASE("oracle reproduces the worked sums and products") {
  CHECK(oracle::matches(ev("1 + M(1)"), oracle::add(val("1+M(2)"), val("eps+M(1)"))));
  CHECK(oracle::matches(ev("M(1)"), oracle::add(val("M(1)"), val("M(3)"))));
  CHECK(oracle::matches(ev("6 + M(1)"), oracle::mul(val("2+M(1)"), val("3+M(2)"))));
  CHECK(oracle::matches(ev("M(3)"), oracle::mul(val("M(1)"), val("M(2)"))));
  CHECK(oracle::matches(ev("0"), oracle::mul(val("1+M(1)"), val("0"))));
  CHECK(oracle::matches(ev("Mmax"), oracle::mul(val("Mmax"), val("eps^2"))));
  CHECK(oracle::matches(ev("0"), oracle::mul(val("Mmax"), val("0"))));
}

TEST_CASE("grid sample agrees with the oracle") {
  const auto grid = oracle::grid();
  CHECK(grid.size() == 781);
  // A strided sample; the acceptance suite covers every pair.
  std::size_t checked = 0;
  for (std::size_t i = 0; i < grid.size(); i += 7) {
    for (std::size_t j = 3; j < grid.size(); j += 11) {
      const auto x = oracle::to_external(grid[i]);
      const auto y = oracle::to_external(grid[j]);
      CHECK(oracle::matches(x + y, oracle::add(grid[i], grid[j])));
      CHECK(oracle::matches(x * y, oracle::mul(grid[i], grid[j])));
      ++checked;
    }
  }
  CHECK(checked > 5000);
}
