#include "tiltwall/charges.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall {

void ThreefoldData::validate() const {
  if (h3 < 1) throw Error(ErrorKind::InvalidArgument, "h3 must be >= 1");
  if (n_tors < 1) throw Error(ErrorKind::InvalidArgument, "tors must be >= 1");
  if (b2 < 1) throw Error(ErrorKind::InvalidArgument, "b2 must be >= 1");
}

bool same_reduced(const Charge& a, const Charge& b) {
  return a.r == b.r && a.c1H2 == b.c1H2 && a.c2H == b.c2H && a.c3 == b.c3;
}

Charge line_bundle_charge(const Rational& k, const ThreefoldData& X) {
  const Rational h = X.H3();
  return Charge{Rational(1),      k * h, k * k * h / 2, k * k * k * h / 6,
                k * k * h,        k * X.C2H()};
}

Charge class_v(const CurveCharge& cc) {
  return Charge{Rational(1), Rational(0), -cc.betaH, -cc.m, Rational(0), Rational(0)};
}

Charge class_vn(const CurveCharge& cc, const ThreefoldData& X) {
  if (cc.n < 1) throw Error(ErrorKind::InvalidN, "n must be >= 1");
  const Rational n(static_cast<long long>(cc.n));
  const Rational h = X.H3();
  Charge c{Rational(0), n * h, -cc.betaH - n * n * h / 2, -cc.m + n * n * n * h / 6,
           std::nullopt, std::nullopt};
  if (X.pic_rank1) {
    c.c1sqH = n * n * h;
    c.c1c2 = n * X.C2H();
  }
  return c;
}

Charge twist_by_bH(const Charge& c, const Rational& b, const ThreefoldData& X) {
  const Rational h = X.H3();
  const Rational b2 = b * b;
  Charge t{c.r,
           c.c1H2 - b * c.r * h,
           c.c2H - b * c.c1H2 + b2 / 2 * c.r * h,
           c.c3 - b * c.c2H + b2 / 2 * c.c1H2 - b2 * b / 6 * c.r * h,
           std::nullopt,
           std::nullopt};
  // (ch1 - b r H)^2.H and (ch1 - b r H).c2 follow from the old refinements.
  if (c.c1sqH) t.c1sqH = *c.c1sqH - 2 * b * c.r * c.c1H2 + b2 * c.r * c.r * h;
  if (c.c1c2) t.c1c2 = *c.c1c2 - b * c.r * X.C2H();
  return t;
}

Charge twist_by_O(const Charge& c, const Rational& a, const ThreefoldData& X) {
  return twist_by_bH(c, -a, X);
}

Rational delta_H(const Charge& c, const ThreefoldData& X) {
  return c.c1H2 * c.c1H2 - 2 * (c.r * X.H3()) * c.c2H;
}

Rational chi_euler(const Charge& c, const ThreefoldData& X) {
  Rational c1c2;
  if (c.c1c2) {
    c1c2 = *c.c1c2;
  } else if (X.pic_rank1) {
    c1c2 = c.c1H2 / X.H3() * X.C2H();
  } else {
    throw Error(ErrorKind::MissingC1c2, "chi needs ch1.c2 or a Picard-rank-one threefold");
  }
  return c.c3 + c1c2 / 12;
}

Rational chi_vn(const CurveCharge& cc, const ThreefoldData& X) {
  if (cc.n < 1) throw Error(ErrorKind::InvalidN, "n must be >= 1");
  const Rational n(static_cast<long long>(cc.n));
  return n * n * n * X.H3() / 6 - n * cc.betaH - cc.m + n * X.C2H() / 12;
}

Charge complement(const Charge& total, const Charge& sub) {
  Charge d{total.r - sub.r, total.c1H2 - sub.c1H2, total.c2H - sub.c2H, total.c3 - sub.c3,
           std::nullopt, std::nullopt};
  if (total.c1c2 && sub.c1c2) d.c1c2 = *total.c1c2 - *sub.c1c2;
  return d;
}

Charge operator+(const Charge& a, const Charge& b) {
  Charge s{a.r + b.r, a.c1H2 + b.c1H2, a.c2H + b.c2H, a.c3 + b.c3, std::nullopt, std::nullopt};
  if (a.c1c2 && b.c1c2) s.c1c2 = *a.c1c2 + *b.c1c2;
  return s;
}

bool hodge_index_check(const Charge& c, const ThreefoldData& X) {
  if (!c.c1sqH) throw Error(ErrorKind::MissingC1sqH, "hodge index check");
  return *c.c1sqH <= c.c1H2 * c.c1H2 / X.H3();
}

bool strong_bogomolov_check(const Charge& c) {
  if (!c.c1sqH) throw Error(ErrorKind::MissingC1sqH, "strong Bogomolov check");
  return (*c.c1sqH - 2 * c.r * c.c2H).sign() >= 0;
}

Rational resolve_Q(const CurveCharge& cc, const ThreefoldData& X) {
  if (cc.Q) return *cc.Q;
  if (!X.pic_rank1) throw Error(ErrorKind::MissingQ, "Q is required when Pic(X) has rank > 1");
  if (cc.n < 1) throw Error(ErrorKind::InvalidN, "n must be >= 1");
  return cc.betaH * cc.betaH / (Rational(static_cast<long long>(cc.n)) * X.H3());
}

Charge with_rank1_refinements(Charge c, const ThreefoldData& X) {
  if (!X.pic_rank1) return c;
  const Rational k = c.c1H2 / X.H3();
  c.c1sqH = k * k * X.H3();
  c.c1c2 = k * X.C2H();
  return c;
}

}  // namespace tiltwall
