#include "umbilic/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>

namespace umbilic {

void Viewport::check() const {
  if (!(x_min < x_max) || !(y_max > 0.0) || !std::isfinite(x_min) || !std::isfinite(x_max) ||
      !std::isfinite(y_max)) {
    throw DomainError("viewport needs x_min < x_max and y_max > 0");
  }
  if (width_px <= 0 || height_px <= 0) {
    throw DomainError("viewport pixel size must be positive");
  }
}

Vec2 Viewport::to_pixel(Vec2 model) const {
  return {(model.x - x_min) / (x_max - x_min) * width_px,
          height_px - model.y / y_max * height_px};
}

Viewport parse_viewport(const std::string& text) {
  Viewport vp;
  std::istringstream in(text);
  std::string field;
  double values[5];
  int count = 0;
  while (std::getline(in, field, ',')) {
    if (count == 5) {
      throw DomainError("viewport expects xmin,xmax,ymax,W,H");
    }
    std::size_t used = 0;
    try {
      values[count] = std::stod(field, &used);
    } catch (const std::exception&) {
      throw DomainError("viewport field '" + field + "' is not a number");
    }
    if (used != field.size()) {
      throw DomainError("viewport field '" + field + "' is not a number");
    }
    ++count;
  }
  if (count != 5) {
    throw DomainError("viewport expects xmin,xmax,ymax,W,H");
  }
  vp.x_min = values[0];
  vp.x_max = values[1];
  vp.y_max = values[2];
  if (values[3] != std::floor(values[3]) || values[4] != std::floor(values[4])) {
    throw DomainError("viewport pixel sizes must be integers");
  }
  vp.width_px = static_cast<int>(values[3]);
  vp.height_px = static_cast<int>(values[4]);
  vp.check();
  return vp;
}

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v + 0.0);
  std::string s(buf);
  if (s == "-0.000") {
    s = "0.000";
  }
  return s;
}

std::string point(Vec2 p) { return num(p.x) + " " + num(p.y); }

// Part of the line anchor + u * dir inside [x_min, x_max] x [0, y_max].
std::optional<std::pair<Vec2, Vec2>> clip_line(Vec2 anchor, Vec2 dir, const Viewport& vp,
                                               bool ray) {
  double lo = ray ? 0.0 : -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  auto slab = [&](double p, double d, double min, double max) {
    if (d == 0.0) {
      return p >= min && p <= max;
    }
    double a = (min - p) / d;
    double b = (max - p) / d;
    if (a > b) {
      std::swap(a, b);
    }
    lo = std::max(lo, a);
    hi = std::min(hi, b);
    return lo <= hi;
  };
  if (!slab(anchor.x, dir.x, vp.x_min, vp.x_max) || !slab(anchor.y, dir.y, 0.0, vp.y_max)) {
    return std::nullopt;
  }
  return std::make_pair(anchor + lo * dir, anchor + hi * dir);
}

std::string line_path(Vec2 anchor, Vec2 dir, const Viewport& vp, bool ray) {
  const auto seg = clip_line(anchor, dir, vp, ray);
  if (!seg) {
    return "M " + point(vp.to_pixel(anchor));
  }
  return "M " + point(vp.to_pixel(seg->first)) + " L " + point(vp.to_pixel(seg->second));
}

std::string circle_path(const Leaf& leaf, const Viewport& vp) {
  const Circle& c = leaf.circle();
  const IdealEndpoints ends = ideal_endpoints(leaf);
  const double rx = c.radius / (vp.x_max - vp.x_min) * vp.width_px;
  const double ry = c.radius / vp.y_max * vp.height_px;
  const std::string radii = "A " + num(rx) + " " + num(ry) + " 0 ";
  const Vec2 left = vp.to_pixel({ends.minus, 0.0});
  if (ends.minus == ends.plus) {
    // Tangent to the boundary: two half-turns through the top point.
    const Vec2 top = vp.to_pixel({c.center.x, c.center.y + c.radius});
    return "M " + point(left) + " " + radii + "0 1 " + point(top) + " " + radii + "0 1 " +
           point(left);
  }
  const Vec2 right = vp.to_pixel({ends.plus, 0.0});
  const char* large = c.center.y > 0.0 ? "1" : "0";
  return "M " + point(left) + " " + radii + large + " 1 " + point(right);
}

std::string leaf_path(const Leaf& leaf, const Viewport& vp) {
  if (leaf.is_circle()) {
    return circle_path(leaf, vp);
  }
  return line_path(leaf.line().anchor, leaf.line().direction, vp, false);
}

std::string transversal_path(const Transversal& tr, const Viewport& vp) {
  switch (tr.kind()) {
    case TransversalKind::Geodesic:
      return line_path({0.0, 0.0}, {0.0, 1.0}, vp, true);
    case TransversalKind::Hypercycle:
      return line_path({0.0, 0.0}, {std::cos(tr.phi()), std::sin(tr.phi())}, vp, true);
    case TransversalKind::Horocycle:
      return line_path({0.0, tr.height()}, {1.0, 0.0}, vp, false);
  }
  return "";
}

bool pinned(const Leaf& leaf, const Transversal& tr) {
  const double bound = tr.bound();
  return tr.kind() != TransversalKind::Horocycle &&
         std::fabs(std::fabs(leaf.h()) - bound) <= 1e-9;
}

}  // namespace

std::string render_svg(const FoliationSlice& slice, const Viewport& vp, const SvgStyle& style) {
  vp.check();
  const std::string w = std::to_string(vp.width_px);
  const std::string h = std::to_string(vp.height_px);
  const std::string sw = num(style.stroke_width);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
      << "  <rect class=\"frame\" x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
      << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << sw << "\"/>\n"
      << "  <line class=\"boundary\" x1=\"0\" y1=\"" << h << "\" x2=\"" << w << "\" y2=\"" << h
      << "\" stroke=\"#000000\" stroke-width=\"" << num(2.0 * style.stroke_width) << "\"/>\n"
      << "  <path class=\"transversal\" d=\"" << transversal_path(slice.transversal, vp)
      << "\" fill=\"none\" stroke=\"" << style.transversal_stroke << "\" stroke-width=\""
      << num(2.0 * style.stroke_width) << "\"/>\n"
      << "  <g class=\"leaves\" fill=\"none\" stroke-width=\"" << sw << "\">\n";
  for (const SliceLeaf& sl : slice.leaves) {
    const bool zone = pinned(sl.leaf, slice.transversal);
    out << "    <path class=\"leaf" << (zone ? " zone" : "") << "\" data-t=\"" << num(sl.t)
        << "\" d=\"" << leaf_path(sl.leaf, vp) << "\" stroke=\""
        << (zone ? style.zone_stroke : style.leaf_stroke) << "\""
        << (zone && style.dash_zone_leaves ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
  }
  for (const Leaf& leaf : slice.extension_leaves) {
    out << "    <path class=\"leaf extension\" d=\"" << leaf_path(leaf, vp) << "\" stroke=\""
        << style.extension_stroke << "\" stroke-dasharray=\"2 3\"/>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace umbilic
