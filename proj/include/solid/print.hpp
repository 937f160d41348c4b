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

#ifndef SOLID_PRINT_HPP
#define SOLID_PRINT_HPP

#include <iosfwd>
#include <string>

#include "solid/external_number.hpp"

namespace solid {

// Terms in increasing exponent order, e.g. "-1/2*eps^-1 + 3 - eps^2".
// The zero polynomial prints as "0".
std::string format_terms(const LaurentPoly& p);

// Polynomials print as terms; proper quotients as "<num>/(<den>)".
std::string format_ratfun(const RatFun& r);

// Canonical surface syntax, re-parseable by the expression parser:
// "1 + eps + M(2)", "M(1)", "Mmax", "0", "1/(1 - eps)".
std::string print_canonical(const ExternalNumber& x);

std::ostream& operator<<(std::ostream& os, const ExternalNumber& x);

}  // namespace solid

#endif  // SOLID_PRINT_HPP
