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

#include "solid/laws.hpp"

#include <stdexcept>

namespace solid {

std::string_view to_string(DistBranch b) {
  switch (b) {
    case DistBranch::kMagnitude:
      return "magnitude";
    case DistBranch::kRelative:
      return "relative";
    case DistBranch::kFails:
      break;
  }
  return "none";
}

bool magnitude_distributes(const ExternalNumber& x, const ExternalNumber& y,
                           const ExternalNumber& z) {
  const ExternalNumber ex = neutral(x);
  return ex * (y + z) == ex * y + ex * z;
}

bool relative_uncertainty_bound(const ExternalNumber& x, const ExternalNumber& y,
                                const ExternalNumber& z) {
  return rel_uncertainty(x) <= rel_uncertainty(y) + rel_uncertainty(z);
}

DistReport dist_decide(const ExternalNumber& x, const ExternalNumber& y,
                       const ExternalNumber& z) {
  DistReport r;
  r.lhs = x * (y + z);
  r.rhs = x * y + x * z;
  const ExternalNumber ex = neutral(x);
  r.correction = ex * y + ex * z;
  r.holds = r.lhs == r.rhs;
  if (magnitude_distributes(x, y, z))
    r.branch = DistBranch::kMagnitude;
  else if (relative_uncertainty_bound(x, y, z))
    r.branch = DistBranch::kRelative;
  else
    r.branch = DistBranch::kFails;
  return r;
}

bool subdist_check(const ExternalNumber& x, const ExternalNumber& y,
                   const ExternalNumber& z) {
  return x * (y + z) <= x * y + x * z;
}

ExternalNumber axiom22_residual(const ExternalNumber& x, const ExternalNumber& y,
                                const ExternalNumber& z) {
  const ExternalNumber ex = neutral(x);
  ExternalNumber sum = x * y + x * z;
  const ExternalNumber corrected = x * (y + z) + ex * y + ex * z;
  if (sum != corrected)
    throw std::logic_error("model violation: xy+xz differs from x(y+z)+e(x)y+e(x)z");
  return sum;
}

bool dist_special_cases(const ExternalNumber& x, const ExternalNumber& y,
                        const ExternalNumber& z, DistCase c) {
  switch (c) {
    case DistCase::kBothMagnitudes:
      if (!y.is_magnitude() || !z.is_magnitude())
        throw std::invalid_argument("both-magnitudes case needs magnitude terms");
      break;
    case DistCase::kAbsorbedMagnitude:
      if (!z.is_magnitude() || z.mag() > y.mag())
        throw std::invalid_argument("absorbed-magnitude case needs z = e(z) <= e(y)");
      break;
    case DistCase::kSameSign: {
      const bool py = classify(y) != SignClass::kNegative;
      const bool pz = classify(z) != SignClass::kNegative;
      if (py != pz) throw std::invalid_argument("same-sign case needs terms of one sign");
      break;
    }
    case DistCase::kOwnMagnitude:
      if (z != neutral(y))
        throw std::invalid_argument("own-magnitude case needs z = e(y)");
      return x * (y + z) == x * y + x * z && x * y == x * (y + z);
  }
  return x * (y + z) == x * y + x * z;
}

}  // namespace solid
