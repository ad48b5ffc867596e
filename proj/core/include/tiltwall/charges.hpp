#pragma once

#include <cstdint>
#include <optional>

#include "tiltwall/rational.hpp"

namespace tiltwall {

/// Numerical shadow of a polarised threefold (X, O(1)).
struct ThreefoldData {
  std::int64_t h3 = 1;      ///< H^3
  std::int64_t c2H = 0;     ///< c_2(X).H
  std::int64_t b2 = 1;      ///< b_2(X)
  std::int64_t n_tors = 1;  ///< #H^2(X,Z)_tors
  bool pic_rank1 = true;    ///< every divisor class is a rational multiple of H

  /// Throws `InvalidArgument` unless h3 >= 1, n_tors >= 1 and b2 >= 1.
  void validate() const;

  Rational H3() const { return Rational(static_cast<long long>(h3)); }
  Rational C2H() const { return Rational(static_cast<long long>(c2H)); }

  friend bool operator==(const ThreefoldData&, const ThreefoldData&) = default;
};

/// Reduced Chern character (ch0, ch1.H^2, ch2.H, ch3) with the optional
/// refinements ch1^2.H and ch1.c2(X).
struct Charge {
  Rational r;
  Rational c1H2;
  Rational c2H;
  Rational c3;
  std::optional<Rational> c1sqH;
  std::optional<Rational> c1c2;

  friend bool operator==(const Charge&, const Charge&) = default;
};

/// Curve data (beta.H, m) for the class v = (1, 0, -beta, -m), together with
/// the self-pairing Q = int (beta/nH) . beta at the chosen n.
struct CurveCharge {
  Rational betaH;
  Rational m;
  std::optional<Rational> Q;
  std::int64_t n = 1;

  friend bool operator==(const CurveCharge&, const CurveCharge&) = default;
};

/// The four reduced entries agree; refinements are ignored.
bool same_reduced(const Charge& a, const Charge& b);

/// ch(O_X(k)) with refinements ch1^2.H = k^2 H^3 and ch1.c2 = k c2.H.
Charge line_bundle_charge(const Rational& k, const ThreefoldData& X);

/// v = (1, 0, -beta, -m).
Charge class_v(const CurveCharge& cc);

/// v_n = v - ch(O(-n)) = (0, nH^3, -beta.H - n^2H^3/2, -m + n^3H^3/6).
Charge class_vn(const CurveCharge& cc, const ThreefoldData& X);

/// ch(E) e^{-bH}. Refinements present on the input are carried through exactly.
Charge twist_by_bH(const Charge& c, const Rational& b, const ThreefoldData& X);

/// ch(E) e^{aH}, i.e. twist_by_bH(c, -a).
Charge twist_by_O(const Charge& c, const Rational& a, const ThreefoldData& X);

/// (ch1.H^2)^2 - 2 (ch0 H^3)(ch2.H).
Rational delta_H(const Charge& c, const ThreefoldData& X);

/// Riemann-Roch on a Calabi-Yau threefold: ch3 + ch1.c2/12.
Rational chi_euler(const Charge& c, const ThreefoldData& X);

/// chi(v(n)) = n^3H^3/6 - n beta.H - m + n c2.H/12.
Rational chi_vn(const CurveCharge& cc, const ThreefoldData& X);

/// Componentwise total - sub. ch1.c2 is linear and is subtracted when present
/// on both sides; ch1^2.H is quadratic and is dropped.
Charge complement(const Charge& total, const Charge& sub);

Charge operator+(const Charge& a, const Charge& b);

/// ch1^2.H <= (ch1.H^2)^2 / H^3.
bool hodge_index_check(const Charge& c, const ThreefoldData& X);

/// ch1^2.H - 2 ch0 (ch2.H) >= 0.
bool strong_bogomolov_check(const Charge& c);

/// Q, or (beta.H)^2/(nH^3) when X has Picard rank one. Throws `MissingQ`.
Rational resolve_Q(const CurveCharge& cc, const ThreefoldData& X);

/// Fills ch1^2.H and ch1.c2 from ch1 = (ch1.H^2/H^3) H when X has Picard rank one.
Charge with_rank1_refinements(Charge c, const ThreefoldData& X);

}  // namespace tiltwall
