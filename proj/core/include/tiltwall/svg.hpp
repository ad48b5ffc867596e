#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tiltwall/first_wall.hpp"
#include "tiltwall/walls.hpp"

namespace tiltwall {

struct Viewport {
  Rational b_min;
  Rational b_max;
  Rational w_min;
  Rational w_max;
};

struct SceneLine {
  WallLine line;
  std::string label;
  /// Draw only the segment inside U (the wall proper) instead of the whole
  /// visible line.
  bool clip_to_U = true;
  /// Dashed guide lines get class="guide" instead of "wall".
  bool dashed = false;
};

/// The boundary w = b^2/2 of U.
struct SceneParabola {
  int samples = 96;
};

struct ScenePoint {
  PlanePoint at;
  std::string label;
};

struct SceneLabel {
  PlanePoint at;
  std::string text;
};

using SceneItem = std::variant<SceneLine, SceneParabola, ScenePoint, SceneLabel>;

/// Deterministic SVG 1.1 drawing of the (b, w)-plane. The user unit is one
/// model unit, with y = -w so the picture is upright; every coordinate is
/// rendered from an exact rational with 6 fractional digits. Wall segments
/// carry class="wall". Throws `EmptyViewport` for a degenerate viewport.
std::string render_bw_plane(std::span<const SceneItem> scene, const Viewport& viewport);

struct PlotScene {
  std::vector<SceneItem> items;
  Viewport viewport;
};

/// Walls, boundary and marked points for a first-wall report.
PlotScene first_wall_scene(const FirstWallReport& report, const CurveCharge& cc,
                           const ThreefoldData& X);

}  // namespace tiltwall
