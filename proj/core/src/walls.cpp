#include "tiltwall/walls.hpp"

#include <vector>

#include "tiltwall/error.hpp"

namespace tiltwall {

Wall wall_between(const Charge& u, const Charge& v, const ThreefoldData& X) {
  const Rational h = X.H3();
  const Rational A = u.c2H * v.c1H2 - v.c2H * u.c1H2;
  const Rational B = h * (v.c2H * u.r - u.c2H * v.r);
  const Rational C = h * (v.r * u.c1H2 - u.r * v.c1H2);
  if (!C.is_zero()) return WallLine{-B / C, -A / C};
  if (!B.is_zero()) return VerticalWall{-A / B};
  if (A.is_zero()) throw Error(ErrorKind::ProportionalCharges, "slopes agree identically");
  throw Error(ErrorKind::NoWall, "slopes never agree");
}

std::optional<std::pair<Surd, Surd>> parabola_intersections(const WallLine& l) {
  // b^2/2 = s b + x  <=>  b^2 - 2 s b - 2 x = 0.
  const auto roots = solve_quadratic(Rational(1), -2 * l.slope, -2 * l.intercept);
  if (roots.empty()) return std::nullopt;
  if (roots.size() == 1) return std::make_pair(roots[0], roots[0]);
  return std::make_pair(roots[0], roots[1]);
}

bool li_region_contains(const StabilityParam& p) {
  const Rational fl(p.b.floor());
  const Rational bound = p.b * p.b / 2 + (p.b - fl) * (fl + 1 - p.b) / 2;
  return p.w > bound;
}

bool bg_hypothesis_holds(const Charge& c, const StabilityParam& p, const ThreefoldData& X) {
  const Charge t = twist_by_bH(c, p.b, X);
  return t.c2H == (p.w - p.b * p.b / 2) * c.r * X.H3();
}

std::optional<StabilityParam> bg_hypothesis_locus(const Charge& c, const WallLine& l,
                                                  const ThreefoldData& X) {
  // Hypothesis: ch2.H - b ch1.H^2 + b^2 r H^3 - w r H^3 = 0 with w = s b + x.
  const Rational h = X.H3();
  const Rational qa = c.r * h;
  const Rational qb = -(c.c1H2 + l.slope * c.r * h);
  const Rational qc = c.c2H - l.intercept * c.r * h;

  std::vector<Surd> roots;
  if (!qa.is_zero()) {
    roots = solve_quadratic(qa, qb, qc);
  } else if (!qb.is_zero()) {
    roots.emplace_back(-qc / qb);
  } else if (qc.is_zero()) {
    // Every point of the line satisfies the hypothesis; report its apex over U.
    // The line meets U iff it crosses the parabola; take the midpoint of the chord.
    const auto cut = parabola_intersections(l);
    if (!cut || cut->first == cut->second) {
      throw Error(ErrorKind::NoIntersectionInU, "line misses U");
    }
    const Rational mid = l.slope;  // (b1 + b2)/2
    return StabilityParam{mid, l.at(mid)};
  } else {
    throw Error(ErrorKind::NoIntersectionInU, "hypothesis never holds on the line");
  }

  // Check interiority exactly on the surd values: w - b^2/2 > 0.
  std::optional<Surd> best;
  for (const Surd& b : roots) {
    const Surd w = Surd(l.slope) * b + Surd(l.intercept);
    const Surd gap = w - Surd(Rational(1, 2)) * b * b;
    if (surd_sign(gap) > 0 && (!best || surd_cmp(b, *best) > 0)) best = b;
  }
  if (!best) throw Error(ErrorKind::NoIntersectionInU, "hypothesis locus lies outside U");
  const auto b = best->as_rational();
  if (!b) return std::nullopt;
  return StabilityParam{*b, l.at(*b)};
}

bool bg_inequality_check(const Charge& c, const StabilityParam& p, const ThreefoldData& X) {
  if (!p.in_U()) throw Error(ErrorKind::OutsideU, "(b, w) must satisfy w > b^2/2");
  if (!bg_hypothesis_holds(c, p, X)) {
    throw Error(ErrorKind::HypothesisNotMet, "ch2^{bH}.H != (w - b^2/2) ch0 H^3");
  }
  const Charge t = twist_by_bH(c, p.b, X);
  return t.c3 <= (p.w / 3 - p.b * p.b / 6) * t.c1H2;
}

Rational ch3_bound_F1(const Rational& c, const ThreefoldData& X) {
  return Rational(2, 3) * c * (c - Rational(1) / (2 * X.H3()));
}

Rational ch3_bound_F2n(const Rational& c2, const ThreefoldData& X) {
  return Rational(2, 3) * c2 * (c2 + Rational(1) / (2 * X.H3()));
}

}  // namespace tiltwall
