#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tiltwall/counting.hpp"
#include "tiltwall/error.hpp"

using namespace tiltwall;

namespace {
Rational Q(const char* s) { return Rational::parse(s); }
const ThreefoldData kQuintic{5, 50, 1, 1, true};
CurveCharge cc(long long beta, long long m, std::int64_t n = 1) {
  return CurveCharge{Rational(beta), Rational(m), std::nullopt, n};
}
}  // namespace

TEST(Counting, EulerMultiplicity) {
  EXPECT_EQ(e_n(cc(0, 0, 1), kQuintic), 5);
  ThreefoldData tors = kQuintic;
  tors.n_tors = 2;
  EXPECT_EQ(e_n(cc(0, 0, 1), tors), 20);
  // chi(v(1)) = 4 for beta.H = 1, m = 0: even, so negative
  EXPECT_EQ(chi_vn_integer(cc(1, 0, 1), kQuintic), 4);
  EXPECT_EQ(e_n(cc(1, 0, 1), kQuintic), -4);
}

TEST(Counting, NonIntegerChi) {
  CurveCharge c = cc(0, 0, 1);
  c.m = Q("1/2");
  try {
    (void)e_n(c, kQuintic);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegerChi);
  }
}

TEST(Counting, TheoremTwoRelation) {
  EXPECT_EQ(dt_from_mnop(0, cc(0, 0, 1), kQuintic), 0);
  EXPECT_EQ(dt_from_mnop(1, cc(0, 0, 1), kQuintic), 5);
  oracle::Gen g(13);
  for (int i = 0; i < 200; ++i) {
    const CurveCharge c = cc(g.integer(0, 6), g.integer(-20, 20), g.integer(1, 12));
    const BigInt a = g.integer(-50, 50), b = g.integer(-50, 50);
    EXPECT_EQ(dt_from_mnop(a + b, c, kQuintic), dt_from_mnop(a, c, kQuintic) + dt_from_mnop(b, c, kQuintic));
    // the sign follows the parity of chi
    const BigInt chi = chi_vn_integer(c, kQuintic);
    if (chi != 0) {
      EXPECT_EQ(sgn(e_n(c, kQuintic)) * sgn(chi), mpz_odd_p(chi.get_mpz_t()) ? 1 : -1);
    }
  }
}

TEST(Counting, TodaOriginTerm) {
  InvariantTable I, P;
  P.set(0, 0, 1);
  I.set(1, 0, 7);  // I[m2 = -m = 0, beta]
  const TodaResult r = toda_sum(cc(1, 0, 1), kQuintic, I, P);
  ASSERT_EQ(r.terms.size(), 1u);
  EXPECT_EQ(r.terms[0].multiplicity, -4);
  EXPECT_EQ(r.value, -28);
  EXPECT_EQ(r.terms[0].m2, 0);
}

TEST(Counting, TodaOffOriginTerm) {
  // P[2, beta1 = 1] pairs with I[-3, beta2 = 2]; k = chi - n = 3 gives +3.
  InvariantTable I, P;
  P.set(1, 2, 1);
  I.set(2, -3, 5);
  const TodaResult r = toda_sum(cc(1, 0, 1), kQuintic, I, P);
  ASSERT_EQ(r.terms.size(), 1u);
  EXPECT_EQ(r.terms[0].beta1H, 1);
  EXPECT_EQ(r.terms[0].m1, -2);
  EXPECT_EQ(r.terms[0].multiplicity, 3);
  EXPECT_EQ(r.value, 15);
}

TEST(Counting, TodaConeEdges) {
  InvariantTable I, P;
  EXPECT_EQ(toda_sum(cc(1, 0, 2), kQuintic, I, P).value, 0);
  // beta1.H = 6 beta.H + 1 is outside the cone
  P.set(7, 0, 1);
  I.set(8, 0, 1);
  I.set(8, -14, 1);
  EXPECT_TRUE(toda_sum(cc(1, 0, 2), kQuintic, I, P).terms.empty());
  EXPECT_THROW(toda_sum(cc(1, 0, 2), ThreefoldData{5, 50, 2, 1, false}, I, P), Error);
}

TEST(Counting, TodaConeIsFinite) {
  InvariantTable I, P;
  for (long long beta = 0; beta <= 3; ++beta) {
    for (std::int64_t n = 1; n <= 4; ++n) {
      const TodaResult r = toda_sum(cc(beta, 0, n), kQuintic, I, P);
      const long long k = 6 * beta + 1;
      EXPECT_GT(r.cone_points, 0);
      EXPECT_LE(r.cone_points, k * k * (2 * k * n) * (2 * k * n));
    }
  }
}

TEST(Counting, EmptinessThresholds) {
  InvariantTable I;
  I.set(2, -5, 9);
  I.set(2, 3, 4);
  I.set_empty_below(2, 0);
  EXPECT_EQ(I.get(2, -5), 0);
  EXPECT_EQ(I.get(2, 3), 4);
  EXPECT_EQ(I.get(3, 3), 0);
  EXPECT_EQ(I.empty_below(2), std::optional<std::int64_t>(0));
}

TEST(Counting, Mhat) {
  CurveCharge c = cc(0, 0, 1);
  c.Q = Rational(0);
  EXPECT_EQ(mhat(c, kQuintic), Q("-55/24"));
  c.m = Rational(1);
  EXPECT_EQ(mhat(c, kQuintic), Q("-55/24") + 1);
  const ThreefoldData X{1, 36, 1, 1, true};
  CurveCharge d = cc(3, 0, 2);
  d.Q = Rational(0);
  EXPECT_EQ(mhat(d, X), Rational(3) - Rational(36, 12) - Q("1/3"));
  EXPECT_THROW(mhat(cc(0, 0, 1), kQuintic), Error);
}

TEST(Counting, TwistWorkedCase) {
  const ThreefoldData X{1, 0, 1, 1, true};
  CurveCharge c = cc(3, 0, 2);
  c.Q = Rational(0);
  const CurveCharge t = twist_curve_charge(c, 1, X);
  EXPECT_EQ(t.betaH, Rational(1));
  EXPECT_EQ(t.m, Rational(4));
  EXPECT_EQ(t.Q, Rational(-4));
  EXPECT_EQ(twist_curve_charge(c, 0, X), c);
  EXPECT_EQ(mhat(t, X), mhat(c, X));
}

TEST(Counting, MockDepth) {
  EXPECT_EQ(mock_depth(1, kQuintic), 0);
  EXPECT_EQ(mock_depth(2, kQuintic), 1);
  EXPECT_EQ(mock_depth(5, kQuintic), 4);
  EXPECT_THROW(mock_depth(0, kQuintic), Error);
  EXPECT_THROW(mock_depth(2, ThreefoldData{5, 50, 2, 1, false}), Error);
}
