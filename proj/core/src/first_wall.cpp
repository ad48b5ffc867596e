#include "tiltwall/first_wall.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall {

namespace {

Rational n_of(const CurveCharge& cc) {
  if (cc.n < 1) throw Error(ErrorKind::InvalidN, "n must be >= 1");
  return Rational(static_cast<long long>(cc.n));
}

// b1 > -1/(2H^3) and b2 < -n + 1/(2H^3).
bool b_range_ok(const Surd& b1, const Surd& b2, const Rational& n, const Rational& h) {
  const Rational half = Rational(1) / (2 * h);
  return surd_cmp(b1, Surd(-half)) > 0 && surd_cmp(b2, Surd(-n + half)) < 0;
}

}  // namespace

std::vector<Rational> FirstWallReport::surviving() const {
  std::vector<Rational> out;
  for (const auto& cand : candidates) {
    if (cand.survived()) out.push_back(cand.c);
  }
  return out;
}

Rational first_wall_b0(const CurveCharge& cc, const ThreefoldData& X) {
  const Rational n = n_of(cc);
  return -n / 2 - cc.betaH / (n * X.H3());
}

Rational first_wall_wf(const CurveCharge& cc, const ThreefoldData& X) {
  const Rational n = n_of(cc);
  const Rational h = X.H3();
  const Rational t = cc.betaH / (n * h);
  return n * n / 4 - cc.betaH / h - 3 * cc.m / (n * h) - t * t;
}

Rational first_wall_wjs(const CurveCharge& cc, const ThreefoldData& X) {
  const Rational n = n_of(cc);
  const Rational t = cc.betaH / (n * X.H3());
  return n * n / 4 + t * t;
}

FirstWallReport first_wall(const CurveCharge& cc, const ThreefoldData& X,
                           const FirstWallOptions& options) {
  X.validate();
  if (options.granularity < 1) throw Error(ErrorKind::InvalidArgument, "granularity must be >= 1");
  const Rational n = n_of(cc);
  const Rational h = X.H3();
  const Rational& beta = cc.betaH;
  const Rational& m = cc.m;

  FirstWallReport rep;
  rep.betaH = beta;
  rep.m = m;
  rep.n = cc.n;
  rep.granularity = options.granularity;
  rep.b0 = first_wall_b0(cc, X);
  rep.w_f = first_wall_wf(cc, X);
  rep.w_JS = first_wall_wjs(cc, X);
  const Rational t = beta / (n * h);
  rep.c_lower_exact = -2 * beta - 3 * m / n - 2 * t * t * h;

  if (beta.sign() < 0) {
    rep.empty_moduli = true;
    rep.asymptotic_regime = true;
    return rep;
  }

  const Rational step = Rational(1, static_cast<long long>(options.granularity));
  const Rational k(static_cast<long long>(options.granularity));
  // Grid points c = j/k with -2 beta.H <= c <= -beta.H.
  const BigInt j_lo = Rational(-2 * beta * k).ceil();
  const BigInt j_hi = Rational(-beta * k).floor();
  // Any grid point below -2 beta.H that the exact bound still admits?
  rep.asymptotic_regime = Rational(j_lo - 1) / k < rep.c_lower_exact;

  const bool ch3_filters_apply = beta.sign() > 0;
  for (BigInt j = j_lo; j <= j_hi; ++j) {
    WallCandidate cand;
    cand.c = Rational(j) * step;
    const Rational& c = cand.c;
    const Rational x = c / h;
    cand.w0 = rep.b0 * rep.b0 + x;

    auto record = [&](const char* name, bool passed, bool applicable = true) {
      cand.filters.push_back(FilterResult{name, passed, applicable});
      if (!passed && !cand.eliminated_by) cand.eliminated_by = name;
    };

    record(kFilterWRange, rep.w_f <= cand.w0 && cand.w0 <= rep.w_JS);

    const auto cut = parabola_intersections(WallLine{rep.b0, x});
    if (cut && !(cut->first == cut->second)) {
      cand.b2 = cut->first;
      cand.b1 = cut->second;
      record(kFilterBRange, b_range_ok(*cand.b1, *cand.b2, n, h));
    } else {
      record(kFilterBRange, false);
    }

    if (ch3_filters_apply) {
      // Largest ch3(F1) allowed against the F2(n) bound:
      // -m - ch3(F1) - n(beta.H + c) <= bound_F2n(-beta.H - c).
      const Rational lhs = -m - ch3_bound_F1(c, X) - n * (beta + c);
      record(kFilterCombined, lhs <= ch3_bound_F2n(-beta - c, X));
      // ch3(F2) = -m + n^3H^3/6 - ch3(F1) is smallest at the F1 bound; the
      // lemma needs it to be <= n^3H^3/6.
      const Rational ch3_f2_min = -m + n * n * n * h / 6 - ch3_bound_F1(c, X);
      record(kFilterF2Ch3, ch3_f2_min <= n * n * n * h / 6);
    } else {
      record(kFilterCombined, true, false);
      record(kFilterF2Ch3, true, false);
    }
    rep.candidates.push_back(std::move(cand));
  }

  const auto survivors = rep.surviving();
  rep.unique = survivors.size() == 1 && survivors.front() == -beta;
  return rep;
}

std::optional<std::int64_t> min_n_unique(const CurveCharge& cc, const ThreefoldData& X,
                                         std::int64_t n_max, const FirstWallOptions& options) {
  if (n_max < 1) throw Error(ErrorKind::InvalidN, "n_max must be >= 1");
  std::optional<std::int64_t> best;
  CurveCharge probe = cc;
  for (std::int64_t n = n_max; n >= 1; --n) {
    probe.n = n;
    if (!first_wall(probe, X, options).unique) break;
    best = n;
  }
  return best;
}

}  // namespace tiltwall
