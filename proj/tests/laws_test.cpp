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

#include "solid/laws.hpp"
#include "test_util.hpp"

using solid::DistBranch;
using solid::DistCase;
using solid::ExternalNumber;

TEST_CASE("dist_decide examples") {
  const auto a = solid::dist_decide(ev("1+M(1)"), ev("1"), ev("-1"));
  CHECK_FALSE(a.holds);
  CHECK(a.branch == DistBranch::kFails);
  CHECK(a.lhs == ExternalNumber::zero());
  CHECK(a.rhs == ev("M(1)"));

  const auto b = solid::dist_decide(ev("1+M(1)"), ev("1"), ev("1"));
  CHECK(b.holds);
  CHECK(b.branch == DistBranch::kMagnitude);
  CHECK(b.lhs == ev("2+M(1)"));
  CHECK(b.rhs == b.lhs);

  const auto c = solid::dist_decide(ev("1+M(2)"), ev("1+M(1)"), ev("-1+M(1)"));
  CHECK(c.holds);
  CHECK(c.branch == DistBranch::kRelative);
  CHECK(c.lhs == ev("M(1)"));
  CHECK(c.rhs == ev("M(1)"));
}

TEST_CASE("magnitude branch wins when both disjuncts hold") {
  // x precise: R(x) = 0 and e(x) = 0 both make the law hold.
  const auto r = solid::dist_decide(ev("3"), ev("1+M(1)"), ev("2"));
  CHECK(r.holds);
  CHECK(r.branch == DistBranch::kMagnitude);
  CHECK(solid::relative_uncertainty_bound(ev("3"), ev("1+M(1)"), ev("2")));
}

TEST_CASE("subdist_check") {
  CHECK(solid::subdist_check(ev("1+M(1)"), ev("1"), ev("-1")));
  CHECK(solid::subdist_check(ev("0"), ev("eps+M(3)"), ev("-2")));
  CHECK(solid::subdist_check(ev("M(1)"), ev("1"), ev("1")));
}

TEST_CASE("axiom22_residual") {
  CHECK(solid::axiom22_residual(ev("1+M(1)"), ev("1"), ev("-1")) == ev("M(1)"));
  CHECK(solid::axiom22_residual(ev("2"), ev("eps"), ev("1/(1-eps)")) ==
        ev("2*eps + 2/(1-eps)"));
  CHECK(solid::axiom22_residual(ev("M(2)"), ev("eps"), ev("eps")) == ev("M(3)"));
}

TEST_CASE("dist_special_cases") {
  CHECK(solid::dist_special_cases(ev("1+M(0)"), ev("M(1)"), ev("M(2)"),
                                  DistCase::kBothMagnitudes));
  CHECK(solid::dist_special_cases(ev("eps+M(2)"), ev("2"), ev("3"), DistCase::kSameSign));
  CHECK(solid::dist_special_cases(ev("eps+M(2)"), ev("-2+M(1)"), ev("-eps"),
                                  DistCase::kSameSign));
  CHECK(solid::dist_special_cases(ev("eps^-1+M(0)"), ev("1+M(1)"), ev("M(3)"),
                                  DistCase::kAbsorbedMagnitude));
  CHECK(solid::dist_special_cases(ev("1+M(1)"), ev("1+eps+M(2)"), ev("M(2)"),
                                  DistCase::kOwnMagnitude));
  CHECK_THROWS_AS(solid::dist_special_cases(ev("1"), ev("1"), ev("-1"), DistCase::kSameSign),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      solid::dist_special_cases(ev("1"), ev("1"), ev("M(0)"), DistCase::kAbsorbedMagnitude),
      std::invalid_argument);
}

TEST_CASE("branch names") {
  CHECK(solid::to_string(DistBranch::kMagnitude) == "magnitude");
  CHECK(solid::to_string(DistBranch::kRelative) == "relative");
  CHECK(solid::to_string(DistBranch::kFails) == "none");
}
