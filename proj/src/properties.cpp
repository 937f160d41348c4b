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

// Registry of checkable laws: every axiom of a solid (A-series, in the
// order they are listed) and the theorems derived from them (T-series).

#include <utility>

#include "solid/conformance.hpp"
#include "solid/laws.hpp"

namespace solid {
namespace {

using X = ExternalNumber;

X e(const X& x) { return neutral(x); }
X u(const X& x) { return unity_of(x); }
X inv(const X& x) { return inverse(x); }
X R(const X& x) { return X::of(rel_uncertainty(x)); }
X eps_pow(std::int64_t n) { return X::precise(RatFun(LaurentPoly::eps(n))); }

Verdict ok(bool b) { return b ? Verdict::kHeld : Verdict::kViolated; }
Verdict implies(bool hyp, bool concl) { return hyp ? ok(concl) : Verdict::kVacuous; }
Verdict all_of(std::initializer_list<Verdict> vs) {
  Verdict out = Verdict::kVacuous;
  for (Verdict v : vs) {
    if (v == Verdict::kViolated) return v;
    if (v == Verdict::kHeld) out = v;
  }
  return out;
}

bool positive(const X& x) { return e(x) <= x; }
bool negative(const X& x) { return x < e(x); }

// Puts a pair in ascending order and updates the recorded operands.
void ascending(Trial& t, X& a, X& b, std::string_view na, std::string_view nb) {
  if (b < a) {
    std::swap(a, b);
    t.set(na, a);
    t.set(nb, b);
  }
}

std::vector<Property> axioms() {
  return {
      // Addition.
      {"A1", "x+(y+z) = (x+y)+z",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y"), z = t.any("z");
         return ok(x + (y + z) == (x + y) + z);
       }},
      {"A2", "x+y = y+x",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         return ok(x + y == y + x);
       }},
      {"A3", "x+e(x) = x, and x+f = x implies e(x)+f = e(x)",
       [](Trial& t) {
         auto x = t.any("x");
         auto f = t.coin() ? t.absorbed("f", x.mag()) : t.any("f");
         return all_of({ok(x + e(x) == x), implies(x + f == x, e(x) + f == e(x))});
       }},
      {"A4", "x+(-x) = e(x) and e(-x) = e(x)",
       [](Trial& t) {
         auto x = t.any("x");
         return ok(x + (-x) == e(x) && e(-x) == e(x));
       }},
      {"A5", "e(x+y) = e(x) or e(x+y) = e(y)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         const X s = e(x + y);
         return ok(s == e(x) || s == e(y));
       }},
      // Multiplication.
      {"A6", "x(yz) = (xy)z",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y"), z = t.any("z");
         return ok(x * (y * z) == (x * y) * z);
       }},
      {"A7", "xy = yx",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         return ok(x * y == y * x);
       }},
      {"A8", "x zeroless: x u(x) = x, and xv = x implies u(x)v = u(x)",
       [](Trial& t) {
         auto x = t.zeroless("x");
         const X ux = u(x);
         auto v = t.coin() ? X::one() + t.absorbed("v", e(ux).mag()) : t.any("v");
         t.set("v", v);
         return all_of({ok(x * ux == x), implies(x * v == x, ux * v == ux)});
       }},
      {"A9", "x zeroless: x inv(x) = u(x) and u(inv(x)) = u(x)",
       [](Trial& t) {
         auto x = t.zeroless("x");
         const X d = inv(x);
         return ok(x * d == u(x) && u(d) == u(x));
       }},
      {"A10", "x, y zeroless: u(xy) = u(x) or u(xy) = u(y)",
       [](Trial& t) {
         auto x = t.zeroless("x"), y = t.zeroless("y");
         const X uxy = u(x * y);
         return ok(uxy == u(x) || uxy == u(y));
       }},
      // Order.
      {"A11", "x <= x",
       [](Trial& t) {
         auto x = t.any("x");
         return ok(x <= x);
       }},
      {"A12", "x <= y and y <= x imply x = y",
       [](Trial& t) {
         auto x = t.any("x");
         auto y = t.coin() ? x + t.absorbed("f", x.mag()) : t.any("y");
         t.set("y", y);
         return implies(x <= y && y <= x, x == y);
       }},
      {"A13", "x <= y and y <= z imply x <= z",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y"), z = t.any("z");
         ascending(t, x, y, "x", "y");
         ascending(t, y, z, "y", "z");
         ascending(t, x, y, "x", "y");
         return implies(x <= y && y <= z, x <= z);
       }},
      {"A14", "x <= y or y <= x",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         const auto a = compare(x, y), b = compare(y, x);
         return ok((x <= y || y <= x) && (a < 0) == (b > 0));
       }},
      {"A15", "x <= y implies x+z <= y+z",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y"), z = t.any("z");
         ascending(t, x, y, "x", "y");
         return implies(x <= y, x + z <= y + z);
       }},
      {"A16", "y+e(x) = e(x) implies y <= e(x) and -y <= e(x)",
       [](Trial& t) {
         auto x = t.any("x");
         auto y = t.coin() ? t.absorbed("y", x.mag()) : t.any("y");
         return implies(y + e(x) == e(x), y <= e(x) && -y <= e(x));
       }},
      {"A17", "e(x) < x and y <= z imply xy <= xz",
       [](Trial& t) {
         auto x = t.positive_zeroless("x"), y = t.any("y"), z = t.any("z");
         ascending(t, y, z, "y", "z");
         return implies(e(x) < x && y <= z, x * y <= x * z);
       }},
      {"A18", "e(y) <= y <= z implies e(x)y <= e(x)z",
       [](Trial& t) {
         auto x = t.any("x"), y = t.positive("y"), z = t.coin() ? t.positive("z") : t.any("z");
         ascending(t, y, z, "y", "z");
         return implies(e(y) <= y && y <= z, e(x) * y <= e(x) * z);
       }},
      // Addition and multiplication.
      {"A19", "e(x)y is a magnitude",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         const X p = e(x) * y;
         return ok(p == e(p));
       }},
      {"A20", "e(xy) = e(x)y + e(y)x",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         return ok(e(x * y) == e(x) * y + e(y) * x);
       }},
      {"A21", "x zeroless: e(u(x)) = e(x)/x",
       [](Trial& t) {
         auto x = t.zeroless("x");
         return ok(e(u(x)) == e(x) * inv(x));
       }},
      {"A22", "xy + xz = x(y+z) + e(x)y + e(x)z",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         auto z = t.near_opposite("z", y);
         return ok(x * y + x * z == x * (y + z) + e(x) * y + e(x) * z);
       }},
      {"A23", "-(xy) = (-x)y",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         return ok(-(x * y) == (-x) * y);
       }},
      // Existence.
      {"A24", "0 + x = x",
       [](Trial& t) {
         auto x = t.any("x");
         return ok(X::zero() + x == x && x + X::zero() == x);
       }},
      {"A25", "1 x = x",
       [](Trial& t) {
         auto x = t.any("x");
         return ok(X::one() * x == x && x * X::one() == x);
       }},
      {"A26", "e(x) + M = M",
       [](Trial& t) {
         auto x = t.any("x");
         return ok(e(x) + X::max_magnitude() == X::max_magnitude());
       }},
      {"A27", "some x has e(x) != 0 and e(x) != M",
       [](Trial& t) {
         auto x = t.any("w");
         if (!x.index().is_finite()) {
           x = t.absorbed("w", Magnitude(t.profile().exp_lo));
           if (!x.index().is_finite()) x = X::of(Magnitude(t.profile().exp_lo));
           t.set("w", x);
         }
         return ok(e(x) != X::zero() && e(x) != X::max_magnitude());
       }},
      {"A28", "x = a + e(x) with a precise",
       [](Trial& t) {
         auto x = t.any("x");
         const Decomposition d = decompose(x);
         return ok(x == d.precise + X::of(d.mag) && e(d.precise) == X::zero());
       }},
      {"A29", "magnitudes x < y are separated by a zeroless z with x < z < y",
       [](Trial& t) {
         auto x = t.magnitude("x"), y = t.magnitude("y");
         ascending(t, x, y, "x", "y");
         if (x == y) return Verdict::kVacuous;
         // x = M_j, y = M_k with j > k; eps^t with k <= t < j lies between.
         const MagIndex j = x.index(), k = y.index();
         const std::int64_t s = k.is_finite() ? k.value() : (j.is_finite() ? j.value() - 1 : 0);
         const X z = eps_pow(s) + x;
         t.set("z", z);
         return ok(z.is_zeroless() && x < z && z < y);
       }},
  };
}

std::vector<Property> theorems() {
  return {
      {"T-cancellation", "x+y = x+z iff e(x)+y = e(x)+z",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         auto z = t.coin() ? y + t.absorbed("f", x.mag()) : t.any("z");
         t.set("z", z);
         return ok((x + y == x + z) == (e(x) + y == e(x) + z));
       }},
      {"T-idempotency", "e(x)+e(x) = e(x)",
       [](Trial& t) {
         auto x = t.any("x");
         return ok(e(x) + e(x) == e(x));
       }},
      {"T-linearity", "e(x+y) = e(x)+e(y)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         return ok(e(x + y) == e(x) + e(y));
       }},
      {"T-absorption", "e(x)+e(y) is e(x) or e(y)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         const X s = e(x) + e(y);
         return ok(s == e(x) || s == e(y));
       }},
      {"T-composition", "e(e(x)) = e(x)",
       [](Trial& t) {
         auto x = t.any("x");
         return ok(e(e(x)) == e(x));
       }},
      {"T-representation", "x = e(y) implies x = e(x)",
       [](Trial& t) {
         auto y = t.any("y");
         const X x = e(y);
         t.set("x", x);
         return ok(x == e(x));
       }},
      {"T-symmetric", "-(-x) = x, -(x+y) = -x-y, e(-x) = -e(x) = e(x)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         return ok(-(-x) == x && -(x + y) == (-x) + (-y) && e(-x) == -e(x) && -e(x) == e(x));
       }},
      {"T-magnitude-order", "e(x)+e(y) = e(x) iff e(y) <= e(x)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         return ok((e(x) + e(y) == e(x)) == (e(y) <= e(x)));
       }},
      {"T-positive-sum", "x, y positive imply x+y positive",
       [](Trial& t) {
         auto x = t.positive("x"), y = t.positive("y");
         return ok(positive(x + y));
       }},
      {"T-positive-upward", "e(y) <= y <= x implies e(x) <= x",
       [](Trial& t) {
         auto y = t.positive("y");
         auto x = t.coin() ? y + t.positive("w") : t.any("x");
         t.set("x", x);
         return implies(e(y) <= y && y <= x, e(x) <= x);
       }},
      {"T-absorb-positive", "y positive: y <= e(x) iff e(x)+y = e(x)",
       [](Trial& t) {
         auto x = t.any("x");
         auto y = t.coin() ? abs(t.absorbed("y", x.mag())) : t.positive("y");
         t.set("y", y);
         return implies(positive(y), (y <= e(x)) == (e(x) + y == e(x)));
       }},
      {"T-strict-negative-positive", "x < e(x) and e(y) < y imply x < y",
       [](Trial& t) {
         auto x = t.negative_zeroless("x"), y = t.positive_zeroless("y");
         return implies(x < e(x) && e(y) < y, x < y);
       }},
      {"T-strict-negative-magnitude", "x < e(x) implies x < e(y)",
       [](Trial& t) {
         auto x = t.negative_zeroless("x"), y = t.any("y");
         return implies(x < e(x), x < e(y));
       }},
      {"T-strict-shift", "x < y+e(z) and e(z) < e(x) imply x < y",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y"), z = t.magnitude("z");
         ascending(t, x, y, "x", "y");
         return implies(x < y + e(z) && e(z) < e(x), x < y);
       }},
      {"T-unity-not-magnitude", "x, y zeroless: u(x) != e(u(x)) and u(x) != e(y)",
       [](Trial& t) {
         auto x = t.zeroless("x"), y = t.zeroless("y");
         return ok(u(x) != e(u(x)) && u(x) != e(y));
       }},
      {"T-magnitude-product", "x = e(x) implies e(xy) = e(x)y",
       [](Trial& t) {
         auto x = t.magnitude("x"), y = t.any("y");
         return ok(e(x * y) == e(x) * y);
       }},
      {"T-sign-neglect", "e(y)(-x) = e(y)x",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         return ok(e(y) * (-x) == e(y) * x);
       }},
      {"T-zerodiv", "xy = e(xy) iff x = e(x) or y = e(y)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         return ok((x * y == e(x * y)) == (x == e(x) || y == e(y)));
       }},
      {"T-square-zeroless", "x zeroless implies x^2 != e(x^2)",
       [](Trial& t) {
         auto x = t.zeroless("x");
         return ok(x * x != e(x * x));
       }},
      {"T-equivalences", "x zeroless: u(x)e(x) = x e(u(x)) = e(x), e(inv x) = e(x) inv(x)^2",
       [](Trial& t) {
         auto x = t.zeroless("x");
         const X d = inv(x);
         return ok(u(x) * e(x) == e(x) && x * e(u(x)) == e(x) && e(d) == e(x) * d * d);
       }},
      {"T-scaling", "e(y) <= e(z) implies x e(y) <= x e(z)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y"), z = t.any("z");
         if (e(z) < e(y)) {
           std::swap(y, z);
           t.set("y", y);
           t.set("z", z);
         }
         return implies(e(y) <= e(z), x * e(y) <= x * e(z));
       }},
      {"T-magnitude-factor-bound", "e(x)e(y) <= x e(y)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         return ok(e(x) * e(y) <= x * e(y));
       }},
      {"T-magnitude-product-bound", "e(x)e(y) <= e(xy)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         return ok(e(x) * e(y) <= e(x * y));
       }},
      {"T-positive-product", "x, y positive imply e(xy) <= xy",
       [](Trial& t) {
         auto x = t.positive("x"), y = t.positive("y");
         return ok(e(x * y) <= x * y);
       }},
      {"T-square-positive", "e(x^2) <= x^2 with equality iff x = e(x); e(u(x)) < u(x)",
       [](Trial& t) {
         auto x = t.any("x");
         const X sq = x * x;
         const bool base = e(sq) <= sq && (e(sq) == sq) == (x == e(x));
         if (x.is_magnitude()) return ok(base);
         return ok(base && e(u(x)) < u(x));
       }},
      {"T-sign-reversal", "e(x) < x and y < e(y) imply xy < e(xy)",
       [](Trial& t) {
         auto x = t.positive_zeroless("x"), y = t.negative_zeroless("y");
         return implies(e(x) < x && y < e(y), x * y < e(x * y));
       }},
      {"T-negative-correction", "y <= z and x < e(x) imply xz + e(xy) <= xy + e(xz)",
       [](Trial& t) {
         auto x = t.negative_zeroless("x"), y = t.any("y"), z = t.any("z");
         ascending(t, y, z, "y", "z");
         return implies(y <= z && x < e(x), x * z + e(x * y) <= x * y + e(x * z));
       }},
      {"T-inverse-positive", "x zeroless: e(x) < x iff e(inv x) < inv x",
       [](Trial& t) {
         auto x = t.zeroless("x");
         const X d = inv(x);
         return ok((e(x) < x) == (e(d) < d));
       }},
      {"T-unity-below", "x zeroless, u(x) <= x implies e(x) < x",
       [](Trial& t) {
         auto x = t.coin() ? t.positive_zeroless("x") : t.zeroless("x");
         return implies(u(x) <= x, e(x) < x);
       }},
      {"T-inverse-bounds",
       "u(x) <= x implies inv x <= u(x); e(x) < x <= u(x) implies u(x) <= inv x",
       [](Trial& t) {
         auto x = t.coin(0.8) ? t.positive_zeroless("x") : t.zeroless("x");
         const X ux = u(x), d = inv(x);
         return all_of({implies(ux <= x, d <= ux), implies(e(x) < x && x <= ux, ux <= d)});
       }},
      {"T-inverse-magnitude", "e(inv x) < inv x <= x implies e(inv x) <= e(x)",
       [](Trial& t) {
         auto x = t.positive_zeroless("x");
         if (inv(x) > x) {
           x = inv(x);
           t.set("x", x);
         }
         const X d = inv(x);
         return implies(e(d) < d && d <= x, e(d) <= e(x));
       }},
      {"T-dist-magnitudes", "x(e(y)+e(z)) = x e(y) + x e(z)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y"), z = t.any("z");
         return ok(x * (e(y) + e(z)) == x * e(y) + x * e(z));
       }},
      {"T-dist-magnitude-factor-magnitudes", "e(x)(e(y)+e(z)) = e(x)e(y) + e(x)e(z)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y"), z = t.any("z");
         return ok(e(x) * (e(y) + e(z)) == e(x) * e(y) + e(x) * e(z));
       }},
      {"T-dist-absorbed", "e(z) <= e(y) implies x(y+e(z)) = xy + x e(z)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y"), z = t.any("z");
         if (e(y) < e(z)) {
           std::swap(y, z);
           t.set("y", y);
           t.set("z", z);
         }
         return implies(e(z) <= e(y), x * (y + e(z)) == x * y + x * e(z));
       }},
      {"T-dist-own-magnitude", "xy = x(y+e(y)) = xy + x e(y)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         return ok(x * y == x * (y + e(y)) && x * y == x * y + x * e(y));
       }},
      {"T-zero-one", "properties of 0 and 1",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         const X zero = X::zero(), one = X::one();
         const bool constants = e(zero) == zero && e(one) == zero && one != zero &&
                                u(one) == one && -zero == zero && one * zero == zero &&
                                zero < one && zero <= e(x);
         return all_of({ok(constants), implies(zero <= x, e(x) <= x),
                        implies(zero <= x && zero <= y, zero <= x + y),
                        implies(x <= zero && y <= zero, x + y <= zero)});
       }},
      {"T-zero-absorbing", "x0 = 0",
       [](Trial& t) {
         auto x = t.any("x");
         return ok(x * X::zero() == X::zero());
       }},
      {"T-precise-closed", "precise a, b: a+b, -b, ab precise; u(a), inv(a) precise for a != 0",
       [](Trial& t) {
         auto a = t.precise("a"), b = t.precise("b");
         bool closed = (a + b).is_precise() && (-b).is_precise() && (a * b).is_precise();
         if (a != X::zero()) closed = closed && u(a).is_precise() && inv(a).is_precise();
         return ok(closed);
       }},
      {"T-precise-field", "precise elements form an ordered field",
       [](Trial& t) {
         auto a = t.precise("a"), b = t.precise("b"), c = t.precise("c");
         const X zero = X::zero(), one = X::one();
         bool field = a + (b + c) == (a + b) + c && a * (b * c) == (a * b) * c &&
                      a + b == b + a && a * b == b * a && a * (b + c) == a * b + a * c &&
                      a + (-a) == zero && a * one == a;
         if (a != zero) field = field && a * inv(a) == one;
         return all_of({ok(field), implies(a <= b, a + c <= b + c),
                        implies(zero <= a && zero <= b, zero <= a * b)});
       }},
      {"T-precise-dist", "a precise: a(x+y) = ax + ay",
       [](Trial& t) {
         auto a = t.precise("a"), x = t.any("x");
         auto y = t.near_opposite("y", x);
         return ok(a * (x + y) == a * x + a * y);
       }},
      {"T-unity-precise", "a precise nonzero: u(a) = 1",
       [](Trial& t) {
         auto a = t.precise("a");
         if (a == X::zero()) return Verdict::kVacuous;
         return ok(u(a) == X::one());
       }},
      {"T-subdist", "x(y+z) <= xy + xz",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         auto z = t.near_opposite("z", y);
         return ok(subdist_check(x, y, z));
       }},
      {"T-dist-same-sign", "y, z of the same sign imply x(y+z) = xy + xz",
       [](Trial& t) {
         auto x = t.any("x"), y = t.positive("y"), z = t.positive("z");
         if (t.coin()) {
           y = -y;
           z = -z;
           t.set("y", y);
           t.set("z", z);
         }
         const bool same = positive(y) == positive(z);
         return implies(same, x * (y + z) == x * y + x * z);
       }},
      {"T-doubling", "x(y+y) = xy + xy",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         return ok(x * (y + y) == x * y + x * y);
       }},
      {"T-dist-magnitude-operand",
       "x = e(x), y, z zeroless: e(x)(y+z) = e(x)y + e(x)z iff it equals e(x)y or e(x)z",
       [](Trial& t) {
         auto x = t.magnitude("x"), y = t.zeroless("y");
         auto z = t.near_opposite("z", y, 0.6);
         if (!z.is_zeroless()) throw HypothesisUnmet{};
         const X lhs = e(x) * (y + z);
         return ok((lhs == e(x) * y + e(x) * z) == (lhs == e(x) * y || lhs == e(x) * z));
       }},
      {"T-dist-magnitude-term", "x(z+e(y)) = xz + x e(y)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y"), z = t.any("z");
         return ok(x * (z + e(y)) == x * z + x * e(y));
       }},
      {"T-dist-precise-magnitude", "p precise: x(p+e(y)) = xp + x e(y)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y"), p = t.precise("p");
         return ok(x * (p + e(y)) == x * p + x * e(y));
       }},
      {"T-magnitude-doubling", "p precise: e(x)(p+p) = e(x)p",
       [](Trial& t) {
         auto x = t.any("x"), p = t.precise("p");
         return ok(e(x) * (p + p) == e(x) * p);
       }},
      {"T-relative-cross", "x, y zeroless: R(x) <= R(y) iff e(x)y <= e(y)x",
       [](Trial& t) {
         auto x = t.zeroless("x"), y = t.zeroless("y");
         return ok((R(x) <= R(y)) == (e(x) * y <= e(y) * x));
       }},
      {"T-magnitude-failure", "e(x)(y+z) != e(x)y + e(x)z implies e(x)y = e(x)z",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         auto z = t.near_opposite("z", y, 0.9);
         return implies(!magnitude_distributes(x, y, z), e(x) * y == e(x) * z);
       }},
      {"T-decomposition", "x = a + e(x) zeroless: e(x) < |a|, e(x)/a = e(x)/x = e(u(x))",
       [](Trial& t) {
         auto x = t.zeroless("x");
         const X a = decompose(x).precise;
         return ok(e(x) < abs(a) && e(x) * inv(a) == e(x) * inv(x) &&
                   e(x) * inv(x) == e(u(x)));
       }},
      {"T-unity-remainder", "u(x) = 1 + b + e(u(x)) implies |b| <= e(u(x))",
       [](Trial& t) {
         auto x = t.zeroless("x");
         const X eu = e(u(x));
         X b = t.coin() ? decompose(t.absorbed("b", eu.mag())).precise : t.precise("b");
         t.set("b", b);
         return implies(u(x) == X::one() + b + eu, abs(b) <= eu);
       }},
      {"T-expansion-unity", "x zeroless: u(x) = 1 + e(u(x))",
       [](Trial& t) {
         auto x = t.zeroless("x");
         return ok(u(x) == X::one() + e(u(x)));
       }},
      {"T-unity-magnitude-below-one", "x zeroless: e(u(x)) < 1",
       [](Trial& t) {
         auto x = t.zeroless("x");
         return ok(e(u(x)) < X::one());
       }},
      {"T-magnitude-unity", "y zeroless: e(x)u(y) = e(x)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.zeroless("y");
         return ok(e(x) * u(y) == e(x));
       }},
      {"T-criterion",
       "xy + xz = x(y+z) iff e(x)(y+z) = e(x)y + e(x)z or R(x) <= R(y)+R(z)",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         auto z = t.near_opposite("z", y);
         const DistReport r = dist_decide(x, y, z);
         const bool criterion =
             magnitude_distributes(x, y, z) || relative_uncertainty_bound(x, y, z);
         return ok(r.holds == criterion && r.holds == (r.branch != DistBranch::kFails) &&
                   r.rhs == r.lhs + r.correction);
       }},
      {"T-axiom22-equivalence",
       "the criterion holds iff xy + xz = x(y+z) + e(x)y + e(x)z",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         auto z = t.near_opposite("z", y);
         const bool dist = x * y + x * z == x * (y + z);
         const bool criterion =
             dist == (magnitude_distributes(x, y, z) || relative_uncertainty_bound(x, y, z));
         const bool identity = x * y + x * z == x * (y + z) + e(x) * y + e(x) * z;
         return ok(criterion == identity && criterion);
       }},
      {"T-magnitude-subdist", "e(x)(y+z) <= e(x)y + e(x)z",
       [](Trial& t) {
         auto x = t.any("x"), y = t.any("y");
         auto z = t.near_opposite("z", y);
         return ok(e(x) * (y + z) <= e(x) * y + e(x) * z);
       }},
      {"T-relative-uncertainty", "R(x) = e(x)/x for zeroless x, 0 for precise, M for magnitudes",
       [](Trial& t) {
         auto x = t.any("x");
         if (x.is_magnitude()) return ok(R(x) == X::max_magnitude());
         const bool base = R(x) == e(x) * inv(x) && x == x * (u(x) + R(x));
         if (x.is_precise()) return ok(base && R(x) == X::zero());
         return ok(base);
       }},
      {"T-absolute-value", "|x| is positive; e(x) <= x iff -x <= e(x)",
       [](Trial& t) {
         auto x = t.any("x");
         return ok(positive(abs(x)) && (e(x) <= x) == (-x <= e(x)) &&
                   (negative(x) ? abs(x) == -x : abs(x) == x));
       }},
  };
}

}  // namespace

const std::vector<Property>& registry() {
  static const std::vector<Property> all = [] {
    std::vector<Property> v = axioms();
    for (auto& p : theorems()) v.push_back(std::move(p));
    return v;
  }();
  return all;
}

CriterionSurvey survey_criterion(std::size_t trials, std::uint64_t seed,
                                 const GenProfile& profile) {
  profile.validate();
  CriterionSurvey s;
  s.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    Trial t(trial_rng(seed, i), profile);
    const X x = t.any("x"), y = t.any("y");
    const X z = t.near_opposite("z", y);
    const DistReport r = dist_decide(x, y, z);
    const bool criterion = magnitude_distributes(x, y, z) || relative_uncertainty_bound(x, y, z);
    if (r.holds == criterion) ++s.agreements;
    switch (r.branch) {
      case DistBranch::kMagnitude:
        ++s.magnitude;
        break;
      case DistBranch::kRelative:
        ++s.relative;
        break;
      case DistBranch::kFails:
        ++s.fails;
        break;
    }
  }
  return s;
}

}  // namespace solid
