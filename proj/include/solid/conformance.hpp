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

#ifndef SOLID_CONFORMANCE_HPP
#define SOLID_CONFORMANCE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "solid/external_number.hpp"

namespace solid {

// Knobs of the random external-number generator.
struct GenProfile {
  // Inclusive window for term exponents and finite magnitude indices.
  std::int64_t exp_lo = -2;
  std::int64_t exp_hi = 3;
  std::vector<Rational> coeff_pool = {Rational(-2),   Rational(-1),   Rational(-1, 2),
                                      Rational(1, 2), Rational(1),    Rational(2),
                                      Rational(3)};
  double p_magnitude = 0.15;  // pure magnitude
  double p_precise = 0.2;     // precise element
  double p_extreme = 0.05;    // index drawn from {-inf, +inf}
  std::size_t max_terms = 3;
  double p_quotient = 0.3;   // precise element with a nontrivial denominator
  double p_opposite = 0.25;  // paired operand drawn as -y plus a small element

  // Throws std::invalid_argument for inconsistent settings.
  void validate() const;

  static GenProfile standard() { return {}; }
  static GenProfile magnitudes();
  static GenProfile precise();
  static GenProfile extremes();
  static GenProfile opposite();
  // "default", "magnitudes", "precise", "extremes", "opposite".
  static std::optional<GenProfile> by_name(std::string_view name);
};

using Rng = std::mt19937_64;

// Deterministic per-(seed, index) engine; independent of scheduling.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

ExternalNumber gen_external(Rng& rng, const GenProfile& profile);
ExternalNumber gen_external(std::uint64_t seed, const GenProfile& profile);

// Random element contained in the magnitude m (so x + it = x whenever e(x) = m).
ExternalNumber gen_absorbed(Rng& rng, const GenProfile& profile, Magnitude m);

enum class Verdict { kVacuous, kHeld, kViolated };

// Thrown by a trial when its operands cannot meet a hypothesis; the trial
// then counts as vacuous.
struct HypothesisUnmet {};

// Operand source for one trial. Every drawn operand is recorded under its
// name so a failing trial can be printed.
class Trial {
 public:
  Trial(Rng rng, const GenProfile& profile) : rng_(std::move(rng)), profile_(profile) {}

  ExternalNumber any(std::string_view name);
  ExternalNumber zeroless(std::string_view name);
  ExternalNumber positive(std::string_view name);           // e(x) <= x
  ExternalNumber positive_zeroless(std::string_view name);  // e(x) < x
  ExternalNumber negative_zeroless(std::string_view name);  // x < e(x)
  ExternalNumber magnitude(std::string_view name);
  ExternalNumber precise(std::string_view name);
  ExternalNumber absorbed(std::string_view name, Magnitude m);
  // With probability p (profile default when negative): -y plus an element
  // a few eps-orders smaller than the generator's range; otherwise any().
  ExternalNumber near_opposite(std::string_view name, const ExternalNumber& y,
                               double p = -1.0);

  // Overwrites (or adds) the recorded value of an operand.
  void set(std::string_view name, const ExternalNumber& x);

  bool coin(double p = 0.5);
  Rng& rng() { return rng_; }
  const GenProfile& profile() const { return profile_; }

  // "x=<expr>; y=<expr>" in draw order.
  std::string describe() const;

 private:
  ExternalNumber record(std::string_view name, ExternalNumber x);

  Rng rng_;
  const GenProfile& profile_;
  std::vector<std::pair<std::string, ExternalNumber>> operands_;
};

struct Property {
  std::string id;         // "A1".."A29", "T-<name>"
  std::string statement;  // human-readable law
  std::function<Verdict(Trial&)> check;
};

// Every axiom (A-series, in the listed order) then every theorem (T-series).
const std::vector<Property>& registry();
const Property* find_property(std::string_view id);

struct ConformanceReport {
  std::string property;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t effective = 0;  // trials whose hypothesis was met
  std::optional<std::string> first_counterexample;
  std::uint64_t seed = 0;

  // Fewer than a quarter of the trials exercised the law.
  bool low_coverage() const { return trials > 0 && effective * 4 < trials; }
  // "<id> trials=<n> failures=<m>[ counterexample: ...][ low-coverage effective=<k>]"
  std::string to_line() const;
};

// Throws std::invalid_argument for an unknown id.
ConformanceReport run_property(std::string_view id, std::size_t trials, std::uint64_t seed,
                               const GenProfile& profile);
ConformanceReport run_property(const Property& p, std::size_t trials, std::uint64_t seed,
                               const GenProfile& profile);
std::vector<ConformanceReport> run_all(std::size_t trials, std::uint64_t seed,
                                       const GenProfile& profile);

// Branch census of the distributivity decision over random triples
// (z drawn near-opposite to y per the profile).
struct CriterionSurvey {
  std::size_t trials = 0;
  std::size_t agreements = 0;  // report.holds == criterion disjunction
  std::size_t magnitude = 0;
  std::size_t relative = 0;
  std::size_t fails = 0;
};
CriterionSurvey survey_criterion(std::size_t trials, std::uint64_t seed,
                                 const GenProfile& profile);

}  // namespace solid

#endif  // SOLID_CONFORMANCE_HPP
