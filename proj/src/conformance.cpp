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

#include "solid/conformance.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "solid/print.hpp"

namespace solid {
namespace {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

const Rational& pick_coeff(Rng& rng, const GenProfile& p) {
  return p.coeff_pool[static_cast<std::size_t>(
      uniform_int(rng, 0, static_cast<std::int64_t>(p.coeff_pool.size()) - 1))];
}

LaurentPoly random_poly(Rng& rng, const GenProfile& p, std::int64_t lo, std::int64_t hi) {
  const auto n = uniform_int(rng, 1, static_cast<std::int64_t>(p.max_terms));
  std::vector<LaurentPoly::Term> terms;
  for (std::int64_t i = 0; i < n; ++i) terms.push_back({uniform_int(rng, lo, hi), pick_coeff(rng, p)});
  return LaurentPoly::from_terms(std::move(terms));
}

RatFun random_precise(Rng& rng, const GenProfile& p, std::int64_t lo, std::int64_t hi) {
  RatFun r(random_poly(rng, p, lo, hi));
  if (uniform01(rng) < p.p_quotient) {
    const LaurentPoly den = LaurentPoly(Rational(1)) +
                            LaurentPoly::monomial(pick_coeff(rng, p), uniform_int(rng, 1, 2));
    r = r / RatFun(den);
  }
  return r;
}

MagIndex random_index(Rng& rng, const GenProfile& p) {
  if (uniform01(rng) < p.p_extreme)
    return uniform01(rng) < 0.5 ? MagIndex::neg_inf() : MagIndex::pos_inf();
  return MagIndex(uniform_int(rng, p.exp_lo, p.exp_hi));
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void GenProfile::validate() const {
  auto prob = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (exp_lo > exp_hi) throw std::invalid_argument("empty exponent window");
  if (coeff_pool.empty()) throw std::invalid_argument("empty coefficient pool");
  for (const auto& c : coeff_pool)
    if (c.is_zero()) throw std::invalid_argument("coefficient pool contains zero");
  if (max_terms == 0) throw std::invalid_argument("max_terms must be positive");
  if (!prob(p_magnitude) || !prob(p_precise) || !prob(p_extreme) || !prob(p_quotient) ||
      !prob(p_opposite) || p_magnitude + p_precise > 1.0)
    throw std::invalid_argument("generator probabilities out of range");
}

GenProfile GenProfile::magnitudes() {
  GenProfile p;
  p.p_magnitude = 1.0;
  p.p_precise = 0.0;
  p.p_extreme = 0.2;
  return p;
}

GenProfile GenProfile::precise() {
  GenProfile p;
  p.p_magnitude = 0.0;
  p.p_precise = 1.0;
  return p;
}

GenProfile GenProfile::extremes() {
  GenProfile p;
  p.p_extreme = 0.5;
  return p;
}

GenProfile GenProfile::opposite() {
  GenProfile p;
  p.p_opposite = 0.7;
  return p;
}

std::optional<GenProfile> GenProfile::by_name(std::string_view name) {
  if (name == "default") return standard();
  if (name == "magnitudes") return magnitudes();
  if (name == "precise") return precise();
  if (name == "extremes") return extremes();
  if (name == "opposite") return opposite();
  return std::nullopt;
}

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t a = splitmix(seed);
  const std::uint64_t b = splitmix(a ^ index);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return Rng(seq);
}

ExternalNumber gen_external(Rng& rng, const GenProfile& p) {
  const double r = uniform01(rng);
  if (r < p.p_magnitude) return ExternalNumber::of(Magnitude(random_index(rng, p)));
  if (r < p.p_magnitude + p.p_precise)
    return ExternalNumber::precise(random_precise(rng, p, p.exp_lo, p.exp_hi));
  const MagIndex k = random_index(rng, p);
  if (k.is_pos_inf()) return ExternalNumber::precise(random_precise(rng, p, p.exp_lo, p.exp_hi));
  if (k.is_neg_inf()) return ExternalNumber::max_magnitude();
  const std::int64_t hi = std::min(p.exp_hi, k.value() - 1);
  const std::int64_t lo = std::min(p.exp_lo, hi);
  return ExternalNumber::canonicalize(random_poly(rng, p, lo, hi), Magnitude(k));
}

ExternalNumber gen_external(std::uint64_t seed, const GenProfile& profile) {
  Rng rng = trial_rng(seed, 0);
  return gen_external(rng, profile);
}

ExternalNumber gen_absorbed(Rng& rng, const GenProfile& p, Magnitude m) {
  const MagIndex k = m.index();
  if (k.is_pos_inf()) return ExternalNumber::zero();
  if (k.is_neg_inf()) return gen_external(rng, p);
  const std::int64_t base = k.value();
  switch (uniform_int(rng, 0, 2)) {
    case 0:
      return ExternalNumber::of(Magnitude(base + uniform_int(rng, 0, 2)));
    case 1:
      return ExternalNumber::precise(random_precise(rng, p, base, base + 3));
    default: {
      const std::int64_t top = base + uniform_int(rng, 1, 3);
      return ExternalNumber::canonicalize(random_poly(rng, p, base, top - 1), Magnitude(top));
    }
  }
}

ExternalNumber Trial::record(std::string_view name, ExternalNumber x) {
  set(name, x);
  return x;
}

void Trial::set(std::string_view name, const ExternalNumber& x) {
  for (auto& [n, v] : operands_)
    if (n == name) {
      v = x;
      return;
    }
  operands_.emplace_back(std::string(name), x);
}

bool Trial::coin(double p) { return uniform01(rng_) < p; }

ExternalNumber Trial::any(std::string_view name) { return record(name, gen_external(rng_, profile_)); }

ExternalNumber Trial::zeroless(std::string_view name) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    ExternalNumber x = gen_external(rng_, profile_);
    if (x.is_zeroless()) return record(name, std::move(x));
  }
  throw HypothesisUnmet{};
}

ExternalNumber Trial::positive(std::string_view name) {
  return record(name, abs(gen_external(rng_, profile_)));
}

ExternalNumber Trial::positive_zeroless(std::string_view name) {
  return record(name, abs(zeroless(name)));
}

ExternalNumber Trial::negative_zeroless(std::string_view name) {
  return record(name, -abs(zeroless(name)));
}

ExternalNumber Trial::magnitude(std::string_view name) {
  return record(name, neutral(gen_external(rng_, profile_)));
}

ExternalNumber Trial::precise(std::string_view name) {
  return record(name, decompose(gen_external(rng_, profile_)).precise);
}

ExternalNumber Trial::absorbed(std::string_view name, Magnitude m) {
  return record(name, gen_absorbed(rng_, profile_, m));
}

ExternalNumber Trial::near_opposite(std::string_view name, const ExternalNumber& y, double p) {
  if (!coin(p < 0 ? profile_.p_opposite : p)) return any(name);
  const std::int64_t s = uniform_int(rng_, 1, profile_.exp_hi - profile_.exp_lo + 1);
  const ExternalNumber small =
      gen_external(rng_, profile_) * ExternalNumber::precise(RatFun(LaurentPoly::eps(s)));
  return record(name, -y + small);
}

std::string Trial::describe() const {
  std::string out;
  for (const auto& [n, v] : operands_) {
    if (!out.empty()) out += "; ";
    out += n + "=" + print_canonical(v);
  }
  return out;
}

std::string ConformanceReport::to_line() const {
  std::string line = property + " trials=" + std::to_string(trials) +
                     " failures=" + std::to_string(failures);
  if (first_counterexample) line += " counterexample: " + *first_counterexample;
  if (low_coverage()) line += " low-coverage effective=" + std::to_string(effective);
  return line;
}

const Property* find_property(std::string_view id) {
  for (const auto& p : registry())
    if (p.id == id) return &p;
  return nullptr;
}

ConformanceReport run_property(std::string_view id, std::size_t trials, std::uint64_t seed,
                               const GenProfile& profile) {
  const Property* p = find_property(id);
  if (p == nullptr) throw std::invalid_argument("unknown property id: " + std::string(id));
  return run_property(*p, trials, seed, profile);
}

namespace {

struct Tally {
  std::size_t failures = 0;
  std::size_t effective = 0;
  std::optional<std::string> first;
};

Tally run_block(const Property& prop, std::size_t begin, std::size_t end, std::uint64_t seed,
                const GenProfile& profile) {
  Tally t;
  for (std::size_t i = begin; i < end; ++i) {
    Trial trial(trial_rng(seed, i), profile);
    Verdict v;
    std::string note;
    try {
      v = prop.check(trial);
    } catch (const HypothesisUnmet&) {
      v = Verdict::kVacuous;
    } catch (const std::exception& ex) {
      v = Verdict::kViolated;
      note = std::string(" (") + ex.what() + ")";
    }
    if (v == Verdict::kVacuous) continue;
    ++t.effective;
    if (v == Verdict::kViolated) {
      ++t.failures;
      if (!t.first) t.first = trial.describe() + note;
    }
  }
  return t;
}

}  // namespace

ConformanceReport run_property(const Property& p, std::size_t trials, std::uint64_t seed,
                               const GenProfile& profile) {
  profile.validate();
  ConformanceReport rep;
  rep.property = p.id;
  rep.trials = trials;
  rep.seed = seed;
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, trials / 256 + 1);
  std::vector<Tally> tallies(workers);
  const std::size_t chunk = (trials + workers - 1) / std::max<std::size_t>(workers, 1);
  if (workers <= 1) {
    tallies[0] = run_block(p, 0, trials, seed, profile);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t b = std::min(trials, w * chunk);
      const std::size_t e = std::min(trials, b + chunk);
      pool.emplace_back([&, w, b, e] { tallies[w] = run_block(p, b, e, seed, profile); });
    }
    for (auto& th : pool) th.join();
  }
  // Blocks are contiguous and merged in order, so the first counterexample
  // is the one with the lowest trial index.
  for (auto& t : tallies) {
    rep.failures += t.failures;
    rep.effective += t.effective;
    if (!rep.first_counterexample && t.first) rep.first_counterexample = std::move(t.first);
  }
  return rep;
}

std::vector<ConformanceReport> run_all(std::size_t trials, std::uint64_t seed,
                                       const GenProfile& profile) {
  std::vector<ConformanceReport> out;
  for (const auto& p : registry()) out.push_back(run_property(p, trials, seed, profile));
  return out;
}

}  // namespace solid
