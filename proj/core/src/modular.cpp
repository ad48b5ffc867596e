#include "tiltwall/modular.hpp"

#include <cmath>
#include <numbers>

#include "tiltwall/error.hpp"

namespace tiltwall {

namespace {

void require_no_torsion(const ThreefoldData& X) {
  if (X.n_tors != 1) {
    throw Error(ErrorKind::TorsionUnsupported, "modular series need H^2(X,Z) torsion-free");
  }
}

Rational mod1(const Rational& x) { return x - Rational(x.floor()); }

Rational nn(const CurveCharge& cc) { return Rational(static_cast<long long>(cc.n)); }

}  // namespace

DiscriminantGroup DiscriminantGroup::for_charge(const CurveCharge& cc, const ThreefoldData& X) {
  if (cc.n < 1) throw Error(ErrorKind::InvalidN, "n must be positive");
  return DiscriminantGroup{cc.n * X.h3};
}

Rational DiscriminantGroup::pairing(std::int64_t gamma, const Rational& betaH) const {
  return mod1(Rational(static_cast<long long>(reduce(gamma))) * betaH / Rational(static_cast<long long>(N)));
}

std::int64_t DiscriminantGroup::reduce(std::int64_t gamma) const {
  const std::int64_t r = gamma % N;
  return r < 0 ? r + N : r;
}

QSeries eta_power(std::int64_t e, std::int64_t order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "order must be non-negative");
  // log prod (1-q^k)^e = -e sum sigma(j) q^j / j, so k a_k = -e sum sigma(j) a_{k-j}.
  const auto len = static_cast<std::size_t>(order + 1);
  std::vector<BigInt> sigma(len, 0);
  for (std::size_t d = 1; d < len; ++d) {
    for (std::size_t j = d; j < len; j += d) sigma[j] += static_cast<unsigned long>(d);
  }
  std::vector<BigInt> a(len, 0);
  a[0] = 1;
  const BigInt ee = e;
  for (std::size_t k = 1; k < len; ++k) {
    BigInt acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += sigma[j] * a[k - j];
    acc *= -ee;
    a[k] = acc / static_cast<unsigned long>(k);  // exact
  }
  std::vector<Rational> c;
  c.reserve(len);
  for (auto& v : a) c.emplace_back(v);
  return QSeries(Rational(static_cast<long long>(e), 24), std::move(c));
}

QSeries eta_inverse_power(std::int64_t e, std::int64_t order) { return eta_power(-e, order); }

Rational euler_D(const CurveCharge& cc, const ThreefoldData& X) {
  const Rational n = nn(cc);
  return X.C2H() * n + n * n * n * X.H3();
}

Rational pole_order(const CurveCharge& cc, const ThreefoldData& X) { return euler_D(cc, X) / 24; }

Rational goettsche_c(const CurveCharge& cc, const ThreefoldData& X) {
  const Rational n = nn(cc);
  const Rational Q = resolve_Q(cc, X);
  return n * cc.betaH - cc.betaH * cc.betaH / (2 * n * X.H3()) + Q / 2;
}

QSeries goettsche_series(const CurveCharge& cc, const ThreefoldData& X, const Rational& d,
                         std::int64_t order) {
  require_no_torsion(X);
  const Rational e = euler_D(cc, X);
  const Rational h2 = nn(cc) * X.H3();
  return eta_inverse_power(e.to_int64(), order).shifted(goettsche_c(cc, X) - d / (2 * h2));
}

Rational discriminant(const Rational& h2, const Rational& l2, const Rational& hl) {
  return h2 * l2 - hl * hl;
}

Rational charge_from_NL(const BigInt& k, const CurveCharge& cc, const ThreefoldData& X,
                        const Rational& l2) {
  require_no_torsion(X);
  const Rational nb = nn(cc) * cc.betaH;
  const Rational diff = nb - l2;
  if (!l2.is_integer() || !nb.is_integer() || !(diff / 2).is_integer()) {
    throw Error(ErrorKind::ParityViolation, "l^2 = " + l2.to_string() +
                                                " is not congruent to n beta.H = " + nb.to_string() +
                                                " mod 2");
  }
  return Rational(k) + diff / 2;
}

NLSeries assemble_nl_series(const NLTable& nl, const CurveCharge& cc, const ThreefoldData& X,
                            std::int64_t order) {
  if (!X.pic_rank1) throw Error(ErrorKind::NotPicRank1, "NL assembly assumes Pic X = Z H");
  require_no_torsion(X);
  const DiscriminantGroup G = DiscriminantGroup::for_charge(cc, X);
  const Rational h2 = nn(cc) * X.H3();
  const Rational c = goettsche_c(cc, X);
  const QSeries eta = eta_inverse_power(euler_D(cc, X).to_int64(), order);

  NLSeries out;
  out.weight = Rational(-static_cast<long long>(X.b2), 2) - 1;
  out.components.assign(static_cast<std::size_t>(G.N), QSeries::zero(eta.offset() + c, order));

  std::vector<std::vector<std::pair<Rational, BigInt>>> terms(static_cast<std::size_t>(G.N));
  for (const auto& [key, value] : nl) {
    const auto& [d, gamma] = key;
    if (gamma < 0 || gamma >= G.N) {
      throw Error(ErrorKind::InconsistentCoset, "gamma " + std::to_string(gamma) + " outside Z/" +
                                                    std::to_string(G.N));
    }
    const Rational g(static_cast<long long>(gamma));
    const Rational red = (d + g * g) / Rational(static_cast<long long>(G.N));
    if (!d.is_integer() || !red.is_integer()) {
      throw Error(ErrorKind::InconsistentCoset,
                  "d = " + d.to_string() + " is not in the coset of gamma = " + std::to_string(gamma));
    }
    if (value != 0) terms[static_cast<std::size_t>(gamma)].emplace_back(-d / (2 * h2), value);
  }

  for (std::size_t g = 0; g < terms.size(); ++g) {
    auto& ts = terms[g];
    if (ts.empty()) continue;
    Rational lo = ts.front().first;
    for (const auto& [x, v] : ts) {
      if (!(x - ts.front().first).is_integer()) {
        throw Error(ErrorKind::InconsistentCoset,
                    "component " + std::to_string(g) + " mixes exponents " +
                        ts.front().first.to_string() + " and " + x.to_string());
      }
      lo = std::min(lo, x);
    }
    // sum_d NL q^(-d/2h^2), known through `order` steps above its lowest term
    QSeries theta = QSeries::zero(lo, order);
    for (const auto& [x, v] : ts) theta = theta + QSeries::monomial(x, Rational(v), order).rebased(lo).truncated(order);
    out.components[g] = (theta * eta).shifted(c);
  }
  return out;
}

Rational t_phase(const CurveCharge& cc, const ThreefoldData& X) {
  require_no_torsion(X);
  const Rational n = nn(cc);
  const Rational Q = resolve_Q(cc, X);
  return mod1(X.C2H() * n / 24 + Q / 2 + cc.betaH * n / 2 + n * n * n * X.H3() / 8);
}

bool t_check(const QSeries& s, const Rational& phi) {
  for (const Rational& x : s.support()) {
    if (!(x - phi).is_integer()) return false;
  }
  return true;
}

ComplexMatrix s_matrix(const DiscriminantGroup& G) {
  if (G.N < 1) throw Error(ErrorKind::InvalidArgument, "N must be positive");
  const auto N = static_cast<std::size_t>(G.N);
  const double norm = 1.0 / std::sqrt(static_cast<double>(G.N));
  ComplexMatrix M(N, std::vector<std::complex<double>>(N));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      // reduce g g' mod N before going to floating point
      const auto r = static_cast<double>((i * j) % N);
      const double angle = -2.0 * std::numbers::pi * r / static_cast<double>(G.N);
      M[i][j] = std::polar(norm, angle);
    }
  }
  return M;
}

double unitarity_deviation(const ComplexMatrix& M) {
  double worst = 0.0;
  for (std::size_t i = 0; i < M.size(); ++i) {
    for (std::size_t j = 0; j < M.size(); ++j) {
      std::complex<double> acc = 0.0;
      for (std::size_t k = 0; k < M.size(); ++k) acc += M[i][k] * std::conj(M[j][k]);
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

}  // namespace tiltwall
