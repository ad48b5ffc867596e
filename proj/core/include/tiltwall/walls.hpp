#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "tiltwall/charges.hpp"
#include "tiltwall/stability.hpp"
#include "tiltwall/surd.hpp"

namespace tiltwall {

/// The line w = slope * b + intercept.
struct WallLine {
  Rational slope;
  Rational intercept;

  Rational at(const Rational& b) const { return slope * b + intercept; }
  bool contains(const PlanePoint& p) const { return at(p.b) == p.w; }

  friend bool operator==(const WallLine&, const WallLine&) = default;
};

/// The line b = const. Never produced for the classes v, v_n, O(-n).
struct VerticalWall {
  Rational b;
  friend bool operator==(const VerticalWall&, const VerticalWall&) = default;
};

using Wall = std::variant<WallLine, VerticalWall>;

/// Numerical wall {(b, w) : nu_{b,w}(u) = nu_{b,w}(v)}.
///
/// Cross-multiplying the two slopes gives the affine equation
///   A + B b + C w = 0,
///   A = ch2(u) ch1(v) - ch2(v) ch1(u),
///   B = H^3 (ch2(v) r(u) - ch2(u) r(v)),
///   C = H^3 (r(v) ch1(u) - r(u) ch1(v)),
/// in which the b*w terms cancel. Throws `ProportionalCharges` when A = B = C
/// = 0 and `NoWall` when only A is nonzero.
Wall wall_between(const Charge& u, const Charge& v, const ThreefoldData& X);

/// Values b2 <= b1 where the line meets w = b^2/2, or nothing when it misses.
std::optional<std::pair<Surd, Surd>> parabola_intersections(const WallLine& l);

/// w > b^2/2 + (b - floor b)(floor b + 1 - b)/2, evaluated exactly.
bool li_region_contains(const StabilityParam& p);

/// ch2^{bH}.H = (w - b^2/2) ch0 H^3 at p.
bool bg_hypothesis_holds(const Charge& c, const StabilityParam& p, const ThreefoldData& X);

/// Point of `l` inside U at which the null-locus hypothesis of the
/// Bogomolov-Gieseker conjecture holds for c. Among several such points the
/// one with the largest b is returned. Throws `NoIntersectionInU` if there is
/// none; returns nullopt when the point exists but has irrational coordinates.
std::optional<StabilityParam> bg_hypothesis_locus(const Charge& c, const WallLine& l,
                                                  const ThreefoldData& X);

/// ch3^{bH} <= (w/3 - b^2/6) ch1^{bH}.H^2. Throws `OutsideU` or
/// `HypothesisNotMet` when p is not a valid point for the conjectured bound.
bool bg_inequality_check(const Charge& c, const StabilityParam& p, const ThreefoldData& X);

/// Upper bound (2/3) c (c - 1/(2H^3)) for ch3 of the rank-one destabiliser
/// with ch2.H = c.
Rational ch3_bound_F1(const Rational& c, const ThreefoldData& X);

/// Upper bound (2/3) c2 (c2 + 1/(2H^3)) for ch3(F2(n)) with ch2(F2(n)).H = c2.
Rational ch3_bound_F2n(const Rational& c2, const ThreefoldData& X);

}  // namespace tiltwall
