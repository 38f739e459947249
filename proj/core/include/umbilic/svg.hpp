#pragma once

#include <string>

#include "umbilic/foliation.hpp"

namespace umbilic {

/// Model window [x_min, x_max] x [0, y_max] mapped affinely onto
/// width_px x height_px pixels, y = 0 on the bottom edge.
struct Viewport {
  double x_min = -4.0;
  double x_max = 4.0;
  double y_max = 4.0;
  int width_px = 800;
  int height_px = 400;

  /// Throws DomainError for an empty window or nonpositive pixel size.
  void check() const;
  Vec2 to_pixel(Vec2 model) const;
};

/// Parses "xmin,xmax,ymax,W,H".
Viewport parse_viewport(const std::string& text);

struct SvgStyle {
  std::string leaf_stroke = "#1f4e79";
  std::string zone_stroke = "#922b21";
  std::string extension_stroke = "#7f8c8d";
  std::string transversal_stroke = "#d35400";
  double stroke_width = 1.0;
  /// Draw leaves pinned at the route bound (horocycle-type zones) dashed.
  bool dash_zone_leaves = true;
};

/// SVG 1.1 document: frame, ideal boundary, one path for the transversal and
/// one path per leaf (class "leaf"). Circles are cut analytically at their
/// ideal endpoints. Output depends only on the arguments.
std::string render_svg(const FoliationSlice& slice, const Viewport& viewport,
                       const SvgStyle& style = {});

}  // namespace umbilic
