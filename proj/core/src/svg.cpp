#include "tiltwall/svg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "tiltwall/error.hpp"
#include "tiltwall/stability.hpp"

namespace tiltwall {

namespace {

constexpr int kDigits = 6;

std::string fmt(const Rational& v) { return v.to_decimal(kDigits); }

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// a + b*floor(sqrt(D)*10^9)/10^9, within |b|/10^9 of the surd.
Rational surd_approx(const Surd& s) {
  if (auto r = s.as_rational()) return *r;
  const BigInt scale = 1000000000;
  const BigInt root = sqrt(s.radicand().num() * scale * scale);
  return s.a() + s.b() * Rational(root, scale);
}

// Parameter interval [lo, hi] of b for which (b, line(b)) lies in the box.
std::optional<std::pair<Rational, Rational>> clip_to_box(const WallLine& l, const Viewport& v) {
  Rational lo = v.b_min;
  Rational hi = v.b_max;
  if (l.slope.is_zero()) {
    if (l.intercept < v.w_min || l.intercept > v.w_max) return std::nullopt;
  } else {
    Rational t1 = (v.w_min - l.intercept) / l.slope;
    Rational t2 = (v.w_max - l.intercept) / l.slope;
    if (t1 > t2) std::swap(t1, t2);
    lo = std::max(lo, t1);
    hi = std::min(hi, t2);
  }
  if (lo >= hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

void emit_line(std::ostringstream& os, const SceneLine& item, const Viewport& v) {
  auto range = clip_to_box(item.line, v);
  if (!range) return;
  if (item.clip_to_U) {
    const auto cut = parabola_intersections(item.line);
    if (!cut || cut->first == cut->second) return;
    // Chord endpoints are surds; round inwards.
    const Rational eps_lo = (cut->first.b().abs() + 1) / 1000000000;
    const Rational eps_hi = (cut->second.b().abs() + 1) / 1000000000;
    const Rational b2 = surd_approx(cut->first) + eps_lo;
    const Rational b1 = surd_approx(cut->second) - eps_hi;
    range->first = std::max(range->first, b2);
    range->second = std::min(range->second, b1);
    if (range->first >= range->second) return;
  }
  const Rational& ba = range->first;
  const Rational& bb = range->second;
  os << "  <line class=\"" << (item.dashed ? "guide" : "wall") << "\" x1=\"" << fmt(ba) << "\" y1=\"" << fmt(-item.line.at(ba))
     << "\" x2=\"" << fmt(bb) << "\" y2=\"" << fmt(-item.line.at(bb)) << "\"";
  if (item.dashed) os << " stroke-dasharray=\"0.2,0.2\"";
  os << "/>\n";
  if (!item.label.empty()) {
    os << "  <text class=\"label\" x=\"" << fmt(ba) << "\" y=\"" << fmt(-item.line.at(ba))
       << "\">" << escape(item.label) << "</text>\n";
  }
}

void emit_parabola(std::ostringstream& os, const SceneParabola& item, const Viewport& v) {
  const int samples = std::max(item.samples, 2);
  // Only the part of the curve inside the w-range is drawn, so keep |b| <=
  // sqrt(2 w_max); sample the b-range uniformly and drop points above it.
  os << "  <path class=\"boundary\" d=\"";
  bool first = true;
  const Rational width = v.b_max - v.b_min;
  for (int i = 0; i <= samples; ++i) {
    const Rational b = v.b_min + width * Rational(i, samples);
    const Rational w = b * b / 2;
    if (w > v.w_max || w < v.w_min) {
      continue;
    }
    os << (first ? "M " : " L ") << fmt(b) << " " << fmt(-w);
    first = false;
  }
  os << "\"/>\n";
}

}  // namespace

std::string render_bw_plane(std::span<const SceneItem> scene, const Viewport& v) {
  if (v.b_max <= v.b_min || v.w_max <= v.w_min) {
    throw Error(ErrorKind::EmptyViewport, "viewport must have positive extent");
  }
  const Rational width = v.b_max - v.b_min;
  const Rational height = v.w_max - v.w_min;
  const Rational stroke = std::max(width, height) / 400;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(v.b_min)
     << " " << fmt(-v.w_max) << " " << fmt(width) << " " << fmt(height)
     << "\" width=\"800\">\n";
  os << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(stroke)
     << "\" font-size=\"" << fmt(stroke * 6) << "\">\n";

  // Axes, when visible.
  if (v.w_min <= 0 && v.w_max >= 0) {
    os << "  <line class=\"axis\" x1=\"" << fmt(v.b_min) << "\" y1=\"0.000000\" x2=\""
       << fmt(v.b_max) << "\" y2=\"0.000000\"/>\n";
  }
  if (v.b_min <= 0 && v.b_max >= 0) {
    os << "  <line class=\"axis\" x1=\"0.000000\" y1=\"" << fmt(-v.w_max)
       << "\" x2=\"0.000000\" y2=\"" << fmt(-v.w_min) << "\"/>\n";
  }

  for (const SceneItem& item : scene) {
    std::visit(
        [&](const auto& it) {
          using T = std::decay_t<decltype(it)>;
          if constexpr (std::is_same_v<T, SceneLine>) {
            emit_line(os, it, v);
          } else if constexpr (std::is_same_v<T, SceneParabola>) {
            emit_parabola(os, it, v);
          } else if constexpr (std::is_same_v<T, ScenePoint>) {
            os << "  <circle class=\"point\" cx=\"" << fmt(it.at.b) << "\" cy=\""
               << fmt(-it.at.w) << "\" r=\"" << fmt(stroke * 2) << "\" fill=\"black\"/>\n";
            if (!it.label.empty()) {
              os << "  <text class=\"label\" x=\"" << fmt(it.at.b + stroke * 3) << "\" y=\""
                 << fmt(-it.at.w) << "\" stroke=\"none\" fill=\"black\">" << escape(it.label)
                 << "</text>\n";
            }
          } else {
            os << "  <text class=\"label\" x=\"" << fmt(it.at.b) << "\" y=\"" << fmt(-it.at.w)
               << "\" stroke=\"none\" fill=\"black\">" << escape(it.text) << "</text>\n";
          }
        },
        item);
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

PlotScene first_wall_scene(const FirstWallReport& report, const CurveCharge& cc,
                           const ThreefoldData& X) {
  PlotScene scene;
  scene.items.emplace_back(SceneParabola{});
  const Rational h = X.H3();
  const Rational n(static_cast<long long>(report.n));

  // Joyce-Song wall through Pi(O(-n)) and Pi(v).
  const WallLine js{report.b0, -report.betaH / h};
  scene.items.emplace_back(SceneLine{js, "JS wall", false, true});
  scene.items.emplace_back(SceneLine{js, "", true, false});
  for (const auto& cand : report.candidates) {
    if (!cand.survived()) continue;
    const WallLine l{report.b0, cand.c / h};
    if (l == js) continue;
    scene.items.emplace_back(SceneLine{l, "c=" + cand.c.to_string(), true, false});
  }

  CurveCharge with_n = cc;
  with_n.n = report.n;
  const PlanePoint pi_o = pi_projection(line_bundle_charge(-n, X), X);
  const PlanePoint pi_v = pi_projection(class_v(with_n), X);
  scene.items.emplace_back(ScenePoint{pi_o, "Pi(O(-n))"});
  scene.items.emplace_back(ScenePoint{pi_v, "Pi(v)"});
  scene.items.emplace_back(ScenePoint{PlanePoint{report.b0, report.w_f}, "w_f"});
  scene.items.emplace_back(ScenePoint{PlanePoint{report.b0, report.w_JS}, "w_JS"});

  // Bounding box of the marked points, padded by 10%.
  Rational b_lo = std::min({pi_o.b, pi_v.b, report.b0, Rational(0)});
  Rational b_hi = std::max({pi_o.b, pi_v.b, report.b0, Rational(0)});
  Rational w_lo = std::min({pi_o.w, pi_v.w, report.w_f, Rational(0)});
  Rational w_hi = std::max({pi_o.w, pi_v.w, report.w_JS, Rational(0)});
  const Rational pad_b = (b_hi - b_lo) / 10 + 1;
  const Rational pad_w = (w_hi - w_lo) / 10 + 1;
  scene.viewport = Viewport{b_lo - pad_b, b_hi + pad_b, w_lo - pad_w, w_hi + pad_w};
  return scene;
}

}  // namespace tiltwall
