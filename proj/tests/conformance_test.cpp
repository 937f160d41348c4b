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

#include <set>
#include <stdexcept>
#include <string>

#include "solid/conformance.hpp"
#include "test_util.hpp"

using solid::ExternalNumber;
using solid::GenProfile;

TEST_CASE("gen_external is deterministic and canonical") {
  const GenProfile p;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ExternalNumber x = solid::gen_external(seed, p);
    CHECK(x == solid::gen_external(seed, p));
    CHECK(ev(solid::print_canonical(x)) == x);
  }
}

TEST_CASE("forced generator classes") {
  GenProfile mags;
  mags.p_magnitude = 1;
  mags.p_precise = 0;
  GenProfile prec;
  prec.p_magnitude = 0;
  prec.p_precise = 1;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK(solid::gen_external(seed, mags).is_magnitude());
    CHECK(solid::gen_external(seed, prec).is_precise());
  }
}

TEST_CASE("profile validation") {
  GenProfile p;
  p.coeff_pool.clear();
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  GenProfile q;
  q.p_magnitude = 0.9;
  q.p_precise = 0.9;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  CHECK(GenProfile::by_name("extremes").has_value());
  CHECK_FALSE(GenProfile::by_name("nonsense").has_value());
}

TEST_CASE("gen_absorbed stays inside its magnitude") {
  const GenProfile p;
  auto rng = solid::trial_rng(3, 0);
  for (std::int64_t k = -2; k <= 3; ++k) {
    const auto m = solid::Magnitude(k);
    for (int i = 0; i < 50; ++i) {
      const ExternalNumber f = solid::gen_absorbed(rng, p, m);
      CHECK(f + ExternalNumber::of(m) == ExternalNumber::of(m));
    }
  }
}

TEST_CASE("registry shape") {
  const auto& reg = solid::registry();
  std::set<std::string> ids;
  std::size_t axioms = 0, theorems = 0;
  for (const auto& p : reg) {
    CHECK(ids.insert(p.id).second);
    if (p.id[0] == 'A') ++axioms;
    if (p.id.rfind("T-", 0) == 0) ++theorems;
  }
  CHECK(axioms == 29);
  CHECK(theorems >= 40);
  CHECK(reg.front().id == "A1");
  CHECK(solid::find_property("T-criterion") != nullptr);
  CHECK(solid::find_property("A30") == nullptr);
  CHECK_THROWS_AS(solid::run_property("A30", 1, 0, GenProfile()), std::invalid_argument);
}

TEST_CASE("run_property examples") {
  for (const char* id : {"A3", "A13", "T-criterion"}) {
    const auto r = solid::run_property(id, 1000, 42, GenProfile());
    CAPTURE(id);
    CHECK(r.trials == 1000);
    CHECK(r.failures == 0);
    CHECK_FALSE(r.first_counterexample.has_value());
    CHECK(r.to_line() == std::string(id) + " trials=1000 failures=0");
  }
}

TEST_CASE("run_all with zero trials is vacuous") {
  for (const auto& r : solid::run_all(0, 5, GenProfile())) {
    CHECK(r.trials == 0);
    CHECK(r.failures == 0);
    CHECK_FALSE(r.low_coverage());
  }
}

TEST_CASE("run_all under the magnitude-only profile") {
  for (const auto& r : solid::run_all(300, 42, GenProfile::magnitudes())) {
    CAPTURE(r.to_line());
    CHECK(r.failures == 0);
  }
}

TEST_CASE("violations are reported with a counterexample") {
  const solid::Property bogus{"T-bogus", "x + x = x", [](solid::Trial& t) {
                                const ExternalNumber x = t.any("x");
                                return x + x == x ? solid::Verdict::kHeld
                                                  : solid::Verdict::kViolated;
                              }};
  const auto r = solid::run_property(bogus, 200, 1, GenProfile());
  CHECK(r.failures > 0);
  REQUIRE(r.first_counterexample.has_value());
  CHECK(r.first_counterexample->rfind("x=", 0) == 0);
  CHECK(r.to_line().find(" counterexample: x=") != std::string::npos);
  CHECK(solid::run_property(bogus, 200, 1, GenProfile()).to_line() == r.to_line());
}

TEST_CASE("low coverage is flagged") {
  const solid::Property rare{"T-rare", "vacuous", [](solid::Trial&) {
                               return solid::Verdict::kVacuous;
                             }};
  const auto r = solid::run_property(rare, 40, 0, GenProfile());
  CHECK(r.low_coverage());
  CHECK(r.to_line() == "T-rare trials=40 failures=0 low-coverage effective=0");
}
