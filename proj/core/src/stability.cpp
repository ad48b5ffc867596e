#include "tiltwall/stability.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall {

const Rational& SlopeValue::value() const {
  if (!value_) throw Error(ErrorKind::InvalidArgument, "slope is +inf");
  return *value_;
}

std::strong_ordering operator<=>(const SlopeValue& a, const SlopeValue& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return *a.value_ <=> *b.value_;
}

SlopeValue slope_quotient(const Rational& num, const Rational& den) {
  if (den.is_zero()) return SlopeValue::infinity();
  return SlopeValue(num / den);
}

SlopeValue mu_H(const Charge& c, const ThreefoldData& X) {
  return slope_quotient(c.c1H2, c.r * X.H3());
}

SlopeValue nu_H(const Charge& c) {
  if (!c.r.is_zero()) throw Error(ErrorKind::NonzeroRank, "nu_H is defined for rank zero only");
  return slope_quotient(c.c2H, c.c1H2);
}

SlopeValue nu_bw(const Charge& c, const StabilityParam& p, const ThreefoldData& X) {
  if (!p.in_U()) throw Error(ErrorKind::OutsideU, "(b, w) must satisfy w > b^2/2");
  const Rational h = X.H3();
  return slope_quotient(c.c2H - p.w * c.r * h, c.c1H2 - p.b * c.r * h);
}

SlopeValue N_bw(const Charge& c, const StabilityParam& p, const ThreefoldData& X) {
  if (p.w.is_zero()) throw Error(ErrorKind::ZeroW, "N_{b,w} needs w != 0");
  const Charge t = twist_by_bH(c, p.b, X);
  const Rational& w = p.w;
  return slope_quotient(w * t.c2H - w * w * w / 6 * c.r * X.H3(), w * w * t.c1H2);
}

bool heart_positive(const Charge& c, const StabilityParam& p, const ThreefoldData& X) {
  if (!p.in_U()) throw Error(ErrorKind::OutsideU, "(b, w) must satisfy w > b^2/2");
  const Rational d = c.c1H2 - p.b * c.r * X.H3();
  if (d.sign() < 0) return false;
  if (d.sign() > 0) return true;
  return (c.c2H - p.w * c.r * X.H3()).sign() >= 0;
}

PlanePoint pi_projection(const Charge& c, const ThreefoldData& X) {
  if (c.r.is_zero()) throw Error(ErrorKind::RankZero, "projection is undefined for rank zero");
  const Rational rh = c.r * X.H3();
  return PlanePoint{c.c1H2 / rh, c.c2H / rh};
}

SlopeValue attractor_slope(const Charge& c, const CurveCharge& cc, const ThreefoldData& X,
                           const std::optional<Rational>& ch1_beta) {
  if (!c.r.is_zero()) throw Error(ErrorKind::NonzeroRank, "attractor slope is for rank zero");
  if (cc.n < 1) throw Error(ErrorKind::InvalidN, "n must be >= 1");
  Rational pairing;
  if (ch1_beta) {
    pairing = *ch1_beta;
  } else if (X.pic_rank1) {
    pairing = c.c1H2 / X.H3() * cc.betaH;
  } else {
    throw Error(ErrorKind::MissingPairing, "ch1.beta must be supplied when Pic(X) has rank > 1");
  }
  if (c.c1H2.is_zero()) return SlopeValue::infinity();
  const Rational n(static_cast<long long>(cc.n));
  return SlopeValue(c.c2H / c.c1H2 - pairing / (n * c.c1H2));
}

}  // namespace tiltwall
