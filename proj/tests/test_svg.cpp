#include <gtest/gtest.h>

#include <cmath>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "umbilic/svg.hpp"

using namespace umbilic;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

std::vector<std::string> leaf_paths(const std::string& svg) {
  std::vector<std::string> out;
  const std::regex re(R"re(<path class="leaf[^"]*"[^>]* d="([^"]*)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator();
       ++it) {
    out.push_back((*it)[1]);
  }
  return out;
}

std::vector<double> numbers(const std::string& d) {
  std::vector<double> out;
  const std::regex re(R"(-?\d+(\.\d+)?)");
  for (auto it = std::sregex_iterator(d.begin(), d.end(), re); it != std::sregex_iterator(); ++it) {
    out.push_back(std::stod(it->str()));
  }
  return out;
}

double px_x(const Viewport& vp, double x) { return (x - vp.x_min) / (vp.x_max - vp.x_min) * vp.width_px; }
double px_y(const Viewport& vp, double y) { return vp.height_px * (1.0 - y / vp.y_max); }

}  // namespace

TEST(Svg, EmptySliceHasFrameAndTransversal) {
  const FoliationSlice empty{Transversal::geodesic(), {}, {}, std::nullopt};
  const std::string svg = render_svg(empty, Viewport{});
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count(svg, "<svg "), 1u);
  EXPECT_EQ(count(svg, "class=\"frame\""), 1u);
  EXPECT_EQ(count(svg, "class=\"boundary\""), 1u);
  EXPECT_EQ(count(svg, "class=\"transversal\""), 1u);
  EXPECT_EQ(count(svg, "class=\"leaf"), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Svg, PencilArcsEndAtCommonPoints) {
  const Viewport vp{-4.0, 4.0, 4.0, 800, 400};
  const FoliationSlice slice =
      synthesize(builtin({BuiltinName::Pencil, Transversal::geodesic()}, -3, 3, 41));
  const std::string svg = render_svg(slice, vp);
  const auto paths = leaf_paths(svg);
  ASSERT_EQ(paths.size(), 41u);
  EXPECT_EQ(count(svg, "<path class=\"transversal\""), 1u);
  for (const std::string& d : paths) {
    // M x0 y0 A rx ry 0 large 1 x1 y1
    const std::vector<double> v = numbers(d);
    ASSERT_EQ(v.size(), 9u) << d;
    EXPECT_NEAR(v[0], px_x(vp, -1.0), 1.0) << d;
    EXPECT_NEAR(v[1], px_y(vp, 0.0), 1.0) << d;
    EXPECT_NEAR(v[7], px_x(vp, 1.0), 1.0) << d;
    EXPECT_NEAR(v[8], px_y(vp, 0.0), 1.0) << d;
  }
}

TEST(Svg, Deterministic) {
  const FoliationSlice slice = extend(
      synthesize(builtin({BuiltinName::Pencil, Transversal::hypercycle(0.9)}, -2, 2, 21)));
  EXPECT_EQ(render_svg(slice, Viewport{}), render_svg(slice, Viewport{}));
}

TEST(Svg, ZoneLeavesDashedAndLinesClipped) {
  const Transversal g = Transversal::geodesic();
  const FoliationSlice slice = synthesize(Route(g, {-1, 0, 1}, {-1, 0, 1}));
  const Viewport vp{-2.0, 2.0, 3.0, 400, 300};
  const std::string svg = render_svg(slice, vp);
  EXPECT_EQ(count(svg, "class=\"leaf zone\""), 2u);
  EXPECT_EQ(count(svg, "stroke-dasharray=\"6 4\""), 2u);
  // The horizontal line y = e is drawn across the full width.
  const auto paths = leaf_paths(svg);
  ASSERT_EQ(paths.size(), 3u);
  const std::vector<double> line = numbers(paths[2]);
  ASSERT_EQ(line.size(), 4u);
  EXPECT_NEAR(std::min(line[0], line[2]), 0.0, 1e-3);
  EXPECT_NEAR(std::max(line[0], line[2]), 400.0, 1e-3);
  EXPECT_NEAR(line[1], px_y(vp, std::exp(1.0)), 1e-3);
}

TEST(Svg, ViewportValidation) {
  const FoliationSlice empty{Transversal::geodesic(), {}, {}, std::nullopt};
  EXPECT_THROW(render_svg(empty, Viewport{1.0, 1.0, 4.0, 800, 400}), DomainError);
  EXPECT_THROW(render_svg(empty, Viewport{-1.0, 1.0, 0.0, 800, 400}), DomainError);
  EXPECT_THROW(render_svg(empty, Viewport{-1.0, 1.0, 1.0, 0, 400}), DomainError);
  const Viewport vp = parse_viewport("-3,3,2.5,600,250");
  EXPECT_DOUBLE_EQ(vp.x_min, -3.0);
  EXPECT_DOUBLE_EQ(vp.y_max, 2.5);
  EXPECT_EQ(vp.height_px, 250);
  EXPECT_THROW(parse_viewport("-3,3,2"), DomainError);
  EXPECT_THROW(parse_viewport("a,3,2,1,1"), DomainError);
  EXPECT_THROW(parse_viewport("-3,3,2,1.5,1"), DomainError);
}
