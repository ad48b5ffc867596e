#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tiltwall/charges.hpp"
#include "tiltwall/qseries.hpp"

namespace tiltwall {

/// Z/N with N = n H^3.
struct DiscriminantGroup {
  std::int64_t N = 1;

  static DiscriminantGroup for_charge(const CurveCharge& cc, const ThreefoldData& X);
  /// gamma . beta.H / N reduced to [0, 1).
  Rational pairing(std::int64_t gamma, const Rational& betaH) const;
  std::int64_t reduce(std::int64_t gamma) const;
};

/// q^(e/24) prod (1 - q^k)^e for any integer e, through step `order`.
QSeries eta_power(std::int64_t e, std::int64_t order);
/// eta^(-e); coefficients are the e-coloured partition numbers.
QSeries eta_inverse_power(std::int64_t e, std::int64_t order);

/// e(D) = c2.H n + n^3 H^3 for D in |O(n)|.
Rational euler_D(const CurveCharge& cc, const ThreefoldData& X);
/// (n^3 H^3 + n c2.H)/24.
Rational pole_order(const CurveCharge& cc, const ThreefoldData& X);

/// n beta.H - (beta.H)^2/(2 n H^3) + Q/2.
Rational goettsche_c(const CurveCharge& cc, const ThreefoldData& X);

/// q^(c - d/(2h^2)) eta^(-e(D)), h^2 = n H^3.
QSeries goettsche_series(const CurveCharge& cc, const ThreefoldData& X, const Rational& d,
                         std::int64_t order);

/// h2 l2 - hl^2.
Rational discriminant(const Rational& h2, const Rational& l2, const Rational& hl);

/// k + (n beta.H - l2)/2. Throws `ParityViolation` unless l2 is an integer
/// with l2 = n beta.H (mod 2).
Rational charge_from_NL(const BigInt& k, const CurveCharge& cc_base, const ThreefoldData& X,
                        const Rational& l2);

/// Noether-Lefschetz numbers keyed by (d, gamma).
using NLTable = std::map<std::pair<Rational, std::int64_t>, BigInt>;

struct NLSeries {
  std::vector<QSeries> components;  ///< indexed by gamma in Z/N
  Rational weight;                  ///< -b2/2 - 1, metadata only
};

/// Component gamma is q^c eta^(-e(D)) sum_d NL[d, gamma] q^(-d/(2h^2)).
/// Each key must satisfy d + gamma^2 = 0 (mod N) with 0 <= gamma < N, and
/// the exponents within one component must differ by integers; otherwise
/// `InconsistentCoset`.
NLSeries assemble_nl_series(const NLTable& nl, const CurveCharge& cc, const ThreefoldData& X,
                            std::int64_t order);

/// (c2.H n/24 + Q/2 + beta.H n/2 + n^3 H^3/8) mod 1.
Rational t_phase(const CurveCharge& cc, const ThreefoldData& X);

/// Every supported exponent is congruent to phi mod 1.
bool t_check(const QSeries& s, const Rational& phi);

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

/// M[g][g'] = exp(-2 pi i g g'/N)/sqrt(N).
ComplexMatrix s_matrix(const DiscriminantGroup& G);

/// Largest |<row_i, row_j> - delta_ij|.
double unitarity_deviation(const ComplexMatrix& M);

}  // namespace tiltwall
