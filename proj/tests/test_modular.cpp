#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "tiltwall/error.hpp"
#include "tiltwall/modular.hpp"

using namespace tiltwall;

namespace {
Rational Q(const char* s) { return Rational::parse(s); }
const ThreefoldData kQuintic{5, 50, 1, 1, true};
CurveCharge cc(long long beta, long long m, std::int64_t n = 1, std::optional<long long> q = std::nullopt) {
  CurveCharge c{Rational(beta), Rational(m), std::nullopt, n};
  if (q) c.Q = Rational(*q);
  return c;
}
}  // namespace

TEST(Eta, PartitionNumbers) {
  const QSeries s = eta_inverse_power(1, 30);
  const auto p = oracle::partitions(30);
  EXPECT_EQ(s.offset(), Q("-1/24"));
  for (int k = 0; k <= 30; ++k) EXPECT_EQ(s.at(k), Rational(p[static_cast<std::size_t>(k)]));
  EXPECT_EQ(eta_inverse_power(2, 4).at(2), Rational(5));
  EXPECT_EQ(eta_inverse_power(55, 0).offset(), Q("-55/24"));
}

TEST(Eta, ColouredPartitionsMatchConvolution) {
  for (int e : {2, 3, 7, 24}) {
    const QSeries s = eta_inverse_power(e, 12);
    const auto ref = oracle::colored_partitions(e, 12);
    for (int k = 0; k <= 12; ++k) EXPECT_EQ(s.at(k), Rational(ref[static_cast<std::size_t>(k)])) << e;
  }
}

TEST(Eta, PowerTimesInverseIsOne) {
  for (int e : {1, 5, 55}) {
    const QSeries prod = eta_power(e, 15) * eta_inverse_power(e, 15);
    EXPECT_EQ(prod.offset(), Rational(0));
    EXPECT_EQ(prod.at(0), Rational(1));
    for (int k = 1; k <= 15; ++k) EXPECT_EQ(prod.at(k), Rational(0));
  }
  // Euler's pentagonal theorem
  const QSeries e1 = eta_power(1, 12);
  EXPECT_EQ(e1.coeffs(), (std::vector<Rational>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
}

TEST(Goettsche, QuinticN1) {
  const QSeries s = goettsche_series(cc(0, 0, 1, 0), kQuintic, Rational(0), 5);
  EXPECT_EQ(s.offset(), Q("-55/24"));
  EXPECT_EQ(s.at(0), Rational(1));
  EXPECT_EQ(s.at(1), Rational(55));
  EXPECT_EQ(pole_order(cc(0, 0, 1), kQuintic), Q("55/24"));
  EXPECT_EQ(-s.offset(), pole_order(cc(0, 0, 1), kQuintic));
  EXPECT_EQ(euler_D(cc(0, 0, 1), kQuintic), Rational(55));
  // d -> d + 2h^2 lowers the offset by one
  EXPECT_EQ(goettsche_series(cc(0, 0, 1, 0), kQuintic, Rational(10), 5).offset(), Q("-55/24") - 1);
}

TEST(Goettsche, OffsetRearrangement) {
  oracle::Gen g(23);
  for (int i = 0; i < 100; ++i) {
    const CurveCharge c = cc(g.integer(0, 6), 0, g.integer(1, 5), g.integer(-10, 10));
    const Rational d = g.rational(-20, 20, 4);
    const QSeries s = goettsche_series(c, kQuintic, d, 0);
    const Rational h2 = Rational(static_cast<long long>(c.n)) * kQuintic.H3();
    EXPECT_EQ(pole_order(c, kQuintic), -s.offset() + goettsche_c(c, kQuintic) - d / (2 * h2));
  }
}

TEST(Goettsche, TorsionRejected) {
  ThreefoldData X = kQuintic;
  X.n_tors = 2;
  try {
    (void)goettsche_series(cc(0, 0, 1, 0), X, Rational(0), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TorsionUnsupported);
  }
}

TEST(Modular, Discriminant) {
  EXPECT_EQ(discriminant(Rational(5), Rational(3), Rational(4)), Rational(-1));
  EXPECT_EQ(discriminant(Rational(5), Rational(5), Rational(5)), Rational(0));
}

TEST(Modular, DiscriminantSignOnHyperbolicLattices) {
  // On a lattice of signature (1, rho - 1) with h^2 > 0, d = h^2 l^2 - (h.l)^2 <= 0.
  // Check on diag(1, -k) lattices with h = (a, b).
  oracle::Gen g(29);
  for (int i = 0; i < 500; ++i) {
    const long long k = g.integer(1, 9);
    const long long a = g.integer(1, 9), b = g.integer(-3, 3);
    if (a * a - k * b * b <= 0) continue;
    const long long x = g.integer(-9, 9), y = g.integer(-9, 9);
    const Rational h2(a * a - k * b * b), l2(x * x - k * y * y), hl(a * x - k * b * y);
    EXPECT_LE(discriminant(h2, l2, hl), Rational(0));
  }
}

TEST(Modular, ChargeFromNL) {
  EXPECT_EQ(charge_from_NL(0, cc(3, 0, 2), kQuintic, Rational(6)), Rational(0));
  EXPECT_EQ(charge_from_NL(3, cc(2, 0, 1), kQuintic, Rational(2)), Rational(3));
  try {
    (void)charge_from_NL(0, cc(2, 0, 1), kQuintic, Rational(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParityViolation);
  }
  // equivalent discriminant form
  const CurveCharge c = cc(3, 0, 1);
  const Rational l2(5);
  const Rational h2 = kQuintic.H3();
  const Rational d = discriminant(h2, l2, c.betaH);
  EXPECT_EQ(charge_from_NL(2, c, kQuintic, l2),
            Rational(2) + c.betaH / 2 - c.betaH * c.betaH / (2 * h2) - d / (2 * h2));
}

TEST(NLSeries, SingleEntryIsGoettsche) {
  NLTable nl{{{Rational(0), 0}, BigInt(1)}};
  const NLSeries s = assemble_nl_series(nl, cc(0, 0, 1, 0), kQuintic, 8);
  ASSERT_EQ(s.components.size(), 5u);
  EXPECT_EQ(s.components[0], goettsche_series(cc(0, 0, 1, 0), kQuintic, Rational(0), 8));
  for (std::size_t g = 1; g < 5; ++g) EXPECT_TRUE(s.components[g].is_zero());
  EXPECT_EQ(s.weight, Q("-3/2"));
}

TEST(NLSeries, EmptyTableGivesZeroVector) {
  const NLSeries s = assemble_nl_series({}, cc(0, 0, 1, 0), kQuintic, 4);
  ASSERT_EQ(s.components.size(), 5u);
  for (const auto& c : s.components) EXPECT_TRUE(c.is_zero());
}

TEST(NLSeries, EntriesTwoHSquaredApartMerge) {
  // d = 0 and d = -10 (= -2h^2): exponents 0 and +1 relative to q^c.
  NLTable nl{{{Rational(0), 0}, BigInt(2)}, {{Rational(-10), 0}, BigInt(3)}};
  const NLSeries s = assemble_nl_series(nl, cc(0, 0, 1, 0), kQuintic, 6);
  const QSeries g0 = goettsche_series(cc(0, 0, 1, 0), kQuintic, Rational(0), 6);
  const QSeries expected = g0.scaled(Rational(2)) + g0.shifted(Rational(1)).scaled(Rational(3)).truncated(5);
  EXPECT_EQ(s.components[0].offset(), Q("-55/24"));
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(s.components[0].at(k), expected.at(k)) << k;
}

TEST(NLSeries, CosetChecks) {
  NLTable wrong{{{Rational(1), 0}, BigInt(1)}};
  try {
    (void)assemble_nl_series(wrong, cc(0, 0, 1, 0), kQuintic, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentCoset);
  }
  // d = -1 with gamma = 1: (d + 1) = 0 mod 5
  NLTable ok{{{Rational(-1), 1}, BigInt(1)}};
  EXPECT_NO_THROW(assemble_nl_series(ok, cc(1, 0, 1), kQuintic, 3));
  // d = -1 and d = -6 in one component: exponents differ by 1/2
  NLTable mixed{{{Rational(-1), 1}, BigInt(1)}, {{Rational(-6), 1}, BigInt(1)}};
  EXPECT_THROW(assemble_nl_series(mixed, cc(1, 0, 1), kQuintic, 3), Error);
  NLTable out_of_range{{{Rational(0), 5}, BigInt(1)}};
  EXPECT_THROW(assemble_nl_series(out_of_range, cc(0, 0, 1), kQuintic, 3), Error);
}

TEST(TPhase, QuinticAndCongruence) {
  EXPECT_EQ(t_phase(cc(0, 0, 1, 0), kQuintic), Q("17/24"));
  EXPECT_TRUE((Q("-55/24") - Q("65/24")).is_integer());
  const QSeries s = goettsche_series(cc(0, 0, 1, 0), kQuintic, Rational(0), 10);
  EXPECT_TRUE(t_check(s, t_phase(cc(0, 0, 1, 0), kQuintic)));
  EXPECT_FALSE(t_check(QSeries(Q("1/3"), {Rational(1), Rational(1)}), Q("1/2")));
  EXPECT_TRUE(t_check(QSeries::zero(Q("1/3"), 4), Q("1/2")));
  // vanishing phase
  const ThreefoldData X{8, 24, 1, 1, true};
  EXPECT_EQ(t_phase(cc(2, 0, 1, 2), X), Rational(0));
}

TEST(TPhase, ParityValidNLPassesForQuintic) {
  oracle::Gen g(31);
  for (int trial = 0; trial < 40; ++trial) {
    const long long beta = g.integer(-6, 6);
    const CurveCharge c = cc(beta, 0, 1);
    NLTable nl;
    const std::int64_t gamma = ((beta % 5) + 5) % 5;
    for (int i = 0; i < 4; ++i) {
      // l^2 = beta (mod 2), so d = 5 l^2 - beta^2 is parity valid
      const long long l2 = beta + 2 * g.integer(-3, 3);
      nl[{Rational(5 * l2 - beta * beta), gamma}] = g.integer(1, 9);
    }
    const NLSeries s = assemble_nl_series(nl, c, kQuintic, 6);
    EXPECT_TRUE(t_check(s.components[static_cast<std::size_t>(gamma)], t_phase(c, kQuintic)));
  }
}

TEST(SMatrix, SmallCases) {
  const ComplexMatrix one = s_matrix({1});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_NEAR(std::abs(one[0][0] - 1.0), 0.0, 1e-15);
  const ComplexMatrix two = s_matrix({2});
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(two[0][0] - r), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(two[0][1] - r), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(two[1][0] - r), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(two[1][1] + r), 0.0, 1e-12);
}

TEST(SMatrix, Unitary) {
  for (std::int64_t N = 1; N <= 50; ++N) EXPECT_LT(unitarity_deviation(s_matrix({N})), 1e-10) << N;
}

TEST(DiscriminantGroup, Pairing) {
  const DiscriminantGroup G = DiscriminantGroup::for_charge(cc(3, 0, 2), kQuintic);
  EXPECT_EQ(G.N, 10);
  EXPECT_EQ(G.pairing(7, Rational(3)), Q("1/10"));
  EXPECT_EQ(G.pairing(-3, Rational(3)), Q("1/10"));
  EXPECT_EQ(G.reduce(-1), 9);
}
