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

#ifndef SOLID_LAWS_HPP
#define SOLID_LAWS_HPP

#include <string_view>

#include "solid/external_number.hpp"

namespace solid {

// Which disjunct of the distributivity criterion applies. When both do,
// the magnitude branch is reported.
enum class DistBranch { kMagnitude, kRelative, kFails };

std::string_view to_string(DistBranch b);

struct DistReport {
  bool holds = false;
  DistBranch branch = DistBranch::kFails;
  ExternalNumber lhs;         // x(y+z)
  ExternalNumber rhs;         // xy + xz
  ExternalNumber correction;  // e(x)y + e(x)z
};

// e(x)(y+z) = e(x)y + e(x)z.
bool magnitude_distributes(const ExternalNumber& x, const ExternalNumber& y,
                           const ExternalNumber& z);
// R(x) <= R(y) + R(z).
bool relative_uncertainty_bound(const ExternalNumber& x, const ExternalNumber& y,
                                const ExternalNumber& z);

// Evaluates both sides of x(y+z) = xy + xz directly and records which
// criterion disjunct explains the outcome. `holds` is the direct equality;
// it agrees with the criterion on every conforming model.
DistReport dist_decide(const ExternalNumber& x, const ExternalNumber& y,
                       const ExternalNumber& z);

// x(y+z) <= xy + xz.
bool subdist_check(const ExternalNumber& x, const ExternalNumber& y,
                   const ExternalNumber& z);

// Common value of xy + xz and x(y+z) + e(x)y + e(x)z. Throws
// std::logic_error when they differ, which would be a model defect.
ExternalNumber axiom22_residual(const ExternalNumber& x, const ExternalNumber& y,
                                const ExternalNumber& z);

enum class DistCase {
  kBothMagnitudes,     // y, z magnitudes
  kAbsorbedMagnitude,  // z a magnitude with z <= e(y)
  kSameSign,           // y, z both positive or both negative
  kOwnMagnitude,       // z = e(y)
};

// Whether the distributive identity holds in a case where it is known to.
// Throws std::invalid_argument when the operands violate the case's hypothesis.
bool dist_special_cases(const ExternalNumber& x, const ExternalNumber& y,
                        const ExternalNumber& z, DistCase c);

}  // namespace solid

#endif  // SOLID_LAWS_HPP
