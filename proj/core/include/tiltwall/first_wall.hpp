#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiltwall/charges.hpp"
#include "tiltwall/surd.hpp"
#include "tiltwall/walls.hpp"

namespace tiltwall {

/// Filter names, in the order they are applied.
inline constexpr const char* kFilterWRange = "w-range";
inline constexpr const char* kFilterBRange = "b-range";
inline constexpr const char* kFilterCombined = "combined";
inline constexpr const char* kFilterF2Ch3 = "F2-ch3";

struct FilterResult {
  std::string name;
  bool passed = false;
  /// False when the filter's hypotheses do not apply (beta.H = 0 for the
  /// two ch3 filters); such filters count as passed.
  bool applicable = true;

  friend bool operator==(const FilterResult&, const FilterResult&) = default;
};

/// One value c = ch2(F1).H for the rank-one destabilising subsheaf F1.
struct WallCandidate {
  Rational c;
  Rational w0;  ///< b0^2 + c/H^3, where the candidate wall crosses b = b0
  std::optional<Surd> b1;  ///< larger end of the wall in U
  std::optional<Surd> b2;  ///< smaller end of the wall in U
  std::vector<FilterResult> filters;
  std::optional<std::string> eliminated_by;

  bool survived() const { return !eliminated_by.has_value(); }

  friend bool operator==(const WallCandidate&, const WallCandidate&) = default;
};

/// Transcript of the first-wall analysis for the class v_n.
struct FirstWallReport {
  Rational betaH;
  Rational m;
  std::int64_t n = 1;
  std::int64_t granularity = 1;

  Rational b0;    ///< slope of every wall for v_n
  Rational w_f;   ///< lowest w on b = b0 allowed by the BG inequality for v_n
  Rational w_JS;  ///< height of the Joyce-Song wall on b = b0
  /// Exact lower bound on c coming from w0 >= w_f; tends to -2 beta.H.
  Rational c_lower_exact;
  /// True when c_lower_exact excludes every c < -2 beta.H on the candidate
  /// grid, so the enumeration range [-2 beta.H, -beta.H] loses nothing.
  bool asymptotic_regime = true;

  std::vector<WallCandidate> candidates;
  bool unique = false;
  bool empty_moduli = false;

  std::vector<Rational> surviving() const;

  friend bool operator==(const FirstWallReport&, const FirstWallReport&) = default;
};

struct FirstWallOptions {
  /// Candidates run over (1/granularity) Z. Integer values are the rank-one,
  /// ch1 = 0 case; larger values are for experimentation only.
  std::int64_t granularity = 1;
};

/// Enumerates the possible destabilisers of v_n on its first wall and
/// certifies whether the Joyce-Song value c = -beta.H is the only survivor.
FirstWallReport first_wall(const CurveCharge& cc, const ThreefoldData& X,
                           const FirstWallOptions& options = {});

/// Smallest n <= n_max such that first_wall is unique for every n' in
/// [n, n_max]. The n of `cc` is ignored.
std::optional<std::int64_t> min_n_unique(const CurveCharge& cc, const ThreefoldData& X,
                                         std::int64_t n_max,
                                         const FirstWallOptions& options = {});

/// b0 = -n/2 - beta.H/(nH^3).
Rational first_wall_b0(const CurveCharge& cc, const ThreefoldData& X);
/// w_f = n^2/4 - beta.H/H^3 - 3m/(nH^3) - (beta.H/(nH^3))^2.
Rational first_wall_wf(const CurveCharge& cc, const ThreefoldData& X);
/// n^2/4 + (beta.H/(nH^3))^2.
Rational first_wall_wjs(const CurveCharge& cc, const ThreefoldData& X);

}  // namespace tiltwall
