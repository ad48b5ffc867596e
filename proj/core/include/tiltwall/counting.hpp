#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tiltwall/charges.hpp"

namespace tiltwall {

/// User-supplied curve-counting invariants keyed by (beta.H, charge).
/// Missing keys are zero. `below[d] = k` declares every entry of degree d
/// with charge < k empty (zero), overriding stored values.
class InvariantTable {
 public:
  void set(std::int64_t degree, std::int64_t charge, const BigInt& value);
  void set_empty_below(std::int64_t degree, std::int64_t charge);
  BigInt get(std::int64_t degree, std::int64_t charge) const;
  std::optional<std::int64_t> empty_below(std::int64_t degree) const;

  const std::map<std::pair<std::int64_t, std::int64_t>, BigInt>& entries() const {
    return values_;
  }
  const std::map<std::int64_t, std::int64_t>& thresholds() const { return below_; }
  bool empty() const { return values_.empty(); }

 private:
  std::map<std::pair<std::int64_t, std::int64_t>, BigInt> values_;
  std::map<std::int64_t, std::int64_t> below_;
};

/// chi(v(n)) as an integer. Throws `NonIntegerChi`.
BigInt chi_vn_integer(const CurveCharge& cc, const ThreefoldData& X);

/// (-1)^(chi-1) chi n_tors^2 with chi = chi(v(n)).
BigInt e_n(const CurveCharge& cc, const ThreefoldData& X);

/// e_n * I.
BigInt dt_from_mnop(const BigInt& I_value, const CurveCharge& cc, const ThreefoldData& X);

struct TodaTerm {
  std::int64_t beta1H = 0;
  std::int64_t m1 = 0;
  std::int64_t beta2H = 0;
  std::int64_t m2 = 0;
  BigInt multiplicity;  ///< (-1)^(k-1) k with k = chi(v(n)) - n beta1.H
  BigInt value;         ///< multiplicity * I[m2, beta2] * P[-m1, beta1]
};

struct TodaResult {
  BigInt value;
  std::vector<TodaTerm> terms;  ///< nonzero terms, in enumeration order
  std::int64_t cone_points = 0;  ///< pairs visited inside the cone
};

/// Toda's formula taken literally: the sum over (beta1, m1), (beta2, m2) in
/// the cone beta_i.H <= 6 beta.H, |m_i| < (6 beta.H + 1) n with
/// beta2 - beta1 = beta and m1 - m2 - n beta1.H = m. Effective classes only,
/// so beta1.H >= 0. Requires integer beta.H, m and Picard rank one.
TodaResult toda_sum(const CurveCharge& cc, const ThreefoldData& X, const InvariantTable& I,
                    const InvariantTable& P);

/// m + n beta.H/2 - n c2.H/24 - n^3 H^3/24 + Q/2. Throws `MissingQ`.
Rational mhat(const CurveCharge& cc, const ThreefoldData& X);

/// Charge of e^{aH} v_n: beta.H - a n H^3, m + a beta.H + a n^2 H^3/2
/// - a^2 n H^3/2 and Q - 2a beta.H + a^2 n H^3. Q stays empty if absent.
CurveCharge twist_curve_charge(const CurveCharge& cc, std::int64_t a, const ThreefoldData& X);

/// n - 1. Throws `NotPicRank1` or `InvalidN`.
std::int64_t mock_depth(std::int64_t n, const ThreefoldData& X);

}  // namespace tiltwall
