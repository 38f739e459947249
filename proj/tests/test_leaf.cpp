#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "umbilic/contact.hpp"
#include "umbilic/leaf.hpp"

using namespace umbilic;

namespace {

void expect_carrier_near(const Leaf& leaf, const oracle::Carrier& ref, double tol) {
  ASSERT_EQ(leaf.is_circle(), ref.is_circle);
  if (ref.is_circle) {
    EXPECT_NEAR(leaf.circle().center.x, ref.cx, tol);
    EXPECT_NEAR(leaf.circle().center.y, ref.cy, tol);
    EXPECT_NEAR(leaf.circle().radius, ref.r, tol);
  } else {
    EXPECT_NEAR(leaf.line().anchor.x, ref.px, tol);
    EXPECT_NEAR(leaf.line().anchor.y, ref.py, tol);
  }
}

// Crossing lies on the carrier and the carrier is perpendicular there to `dir`.
void expect_orthogonal_crossing(const Leaf& leaf, Vec2 p, Vec2 dir, double tol) {
  if (leaf.is_circle()) {
    const Circle& c = leaf.circle();
    const Vec2 radial = p - c.center;
    EXPECT_NEAR(norm(radial), c.radius, tol * std::max(1.0, c.radius));
    // Tangent is perpendicular to the radius, so the radius must be parallel to dir.
    EXPECT_NEAR(cross(radial, dir) / norm(radial), 0.0, tol);
  } else {
    const Line& l = leaf.line();
    EXPECT_NEAR(cross(p - l.anchor, l.direction), 0.0, tol);
    EXPECT_NEAR(dot(l.direction, dir), 0.0, tol);
  }
}

}  // namespace

TEST(Curvature, FromAngle) {
  EXPECT_NEAR(mean_curvature_from_angle(kHalfPi), 0.0, 1e-16);
  EXPECT_DOUBLE_EQ(mean_curvature_from_angle(kPi), 1.0);
  EXPECT_NEAR(mean_curvature_from_angle(kPi / 3), -0.5, 1e-15);
  EXPECT_THROW(mean_curvature_from_angle(-0.1), DomainError);
  EXPECT_THROW(mean_curvature_from_angle(3.2), DomainError);
}

TEST(Curvature, ToAngle) {
  EXPECT_DOUBLE_EQ(angle_from_mean_curvature(0.0), kHalfPi);
  EXPECT_DOUBLE_EQ(angle_from_mean_curvature(-1.0), 0.0);
  EXPECT_NEAR(angle_from_mean_curvature(0.3), std::acos(-0.3), 1e-15);
  EXPECT_NEAR(angle_from_mean_curvature(0.3), 1.8754889, 1e-7);
  EXPECT_NEAR(mean_curvature_from_angle(angle_from_mean_curvature(0.3)), 0.3, 1e-15);
  EXPECT_THROW(angle_from_mean_curvature(1.01), DomainError);
}

TEST(EquidistantOffset, Examples) {
  EXPECT_NEAR(equidistant_offset(kHalfPi), 0.0, 1e-15);
  EXPECT_NEAR(equidistant_offset(kPi / 3), std::log(std::sqrt(3.0)), 1e-14);
  EXPECT_NEAR(std::sinh(equidistant_offset(kPi / 3)), 1.0 / std::sqrt(3.0), 1e-14);
  EXPECT_TRUE(std::isinf(equidistant_offset(0.0)));
  EXPECT_TRUE(std::isinf(equidistant_offset(kPi)));
}

TEST(EquidistantOffset, SatisfiesBothIdentities) {
  for (int i = 1; i <= 1000; ++i) {
    const double beta = kPi * i / 1001.0;
    const double delta = equidistant_offset(beta);
    EXPECT_NEAR(std::cos(beta), std::tanh(delta), 1e-10) << beta;
    EXPECT_NEAR(1.0 / std::tan(beta), std::sinh(delta), 1e-10 * std::max(1.0, std::cosh(delta)))
        << beta;
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_leaf(kHalfPi), LeafKind::TotallyGeodesic);
  EXPECT_EQ(classify_leaf(0.0), LeafKind::Horosphere);
  EXPECT_EQ(classify_leaf(kPi), LeafKind::Horosphere);
  EXPECT_EQ(classify_leaf(1.2), LeafKind::Hypersphere);
}

TEST(GeodesicLeaf, UnitSemicircle) {
  const Leaf leaf = leaf_orthogonal_to_geodesic(1.0, kHalfPi);
  ASSERT_TRUE(leaf.is_circle());
  EXPECT_NEAR(leaf.circle().center.x, 0.0, 1e-15);
  EXPECT_NEAR(leaf.circle().center.y, 0.0, 1e-15);
  EXPECT_NEAR(leaf.circle().radius, 1.0, 1e-15);
  const IdealEndpoints e = ideal_endpoints(leaf);
  EXPECT_NEAR(e.minus, -1.0, 1e-12);
  EXPECT_NEAR(e.plus, 1.0, 1e-12);
}

TEST(GeodesicLeaf, TangentHorocycle) {
  const Leaf leaf = leaf_orthogonal_to_geodesic(2.0, 0.0);
  ASSERT_TRUE(leaf.is_circle());
  EXPECT_NEAR(leaf.circle().radius, 1.0, 1e-15);
  EXPECT_NEAR(leaf.circle().center.y, 1.0, 1e-15);
  EXPECT_EQ(leaf.kind(), LeafKind::Horosphere);
  const IdealEndpoints e = ideal_endpoints(leaf);
  EXPECT_NEAR(e.minus, 0.0, 1e-9);
  EXPECT_NEAR(e.plus, 0.0, 1e-9);
}

TEST(GeodesicLeaf, ObtuseAngle) {
  const Leaf leaf = leaf_orthogonal_to_geodesic(1.0, 2.0 * kPi / 3.0);
  ASSERT_TRUE(leaf.is_circle());
  EXPECT_NEAR(leaf.circle().radius, 2.0, 1e-14);
  EXPECT_NEAR(leaf.circle().center.y, -1.0, 1e-14);
  const IdealEndpoints e = ideal_endpoints(leaf);
  EXPECT_NEAR(e.minus, -std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(e.plus, std::sqrt(3.0), 1e-12);
  // Endpoints really are on the carrier.
  EXPECT_NEAR(std::hypot(e.plus - 0.0, 0.0 - leaf.circle().center.y), 2.0, 1e-12);
  expect_orthogonal_crossing(leaf, {0.0, 1.0}, {0.0, 1.0}, 1e-10);
}

TEST(GeodesicLeaf, HorizontalLineAtPi) {
  const Leaf leaf = leaf_orthogonal_to_geodesic(3.0, kPi);
  ASSERT_TRUE(leaf.is_line());
  EXPECT_NEAR(leaf.line().anchor.y, 3.0, 1e-15);
  EXPECT_NEAR(leaf.h(), 1.0, 1e-15);
  const IdealEndpoints e = ideal_endpoints(leaf);
  EXPECT_TRUE(std::isinf(e.minus) && e.minus < 0);
  EXPECT_TRUE(std::isinf(e.plus) && e.plus > 0);
}

TEST(GeodesicLeaf, Errors) {
  EXPECT_THROW(leaf_orthogonal_to_geodesic(0.0, 1.0), DomainError);
  EXPECT_THROW(leaf_orthogonal_to_geodesic(-1.0, 1.0), DomainError);
  EXPECT_THROW(leaf_orthogonal_to_geodesic(1.0, -0.2), DomainError);
}

TEST(GeodesicLeaf, MatchesClosedFormAndEndpointLaw) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> ls(-3.0, 3.0), ub(1e-3, kPi - 1e-3);
  for (int i = 0; i < 2000; ++i) {
    const double s = std::exp(ls(gen));
    const double beta = ub(gen);
    const Leaf leaf = leaf_orthogonal_to_geodesic(s, beta);
    expect_carrier_near(leaf, oracle::geodesic_leaf(s, beta), 1e-9 * std::max(1.0, s / (1 + std::cos(beta))));
    const IdealEndpoints e = ideal_endpoints(leaf);
    const double a = s * std::tan(beta / 2.0);
    EXPECT_NEAR(e.minus, -a, 1e-10 * std::max(1.0, a));
    EXPECT_NEAR(e.plus, a, 1e-10 * std::max(1.0, a));
    ASSERT_TRUE(leaf.crossing().has_value());
    EXPECT_NEAR(leaf.crossing()->x, 0.0, 1e-15);
    EXPECT_NEAR(leaf.crossing()->y, s, 1e-12 * s);
    expect_orthogonal_crossing(leaf, {0.0, s}, {0.0, 1.0}, 1e-10);
    EXPECT_NEAR(leaf.h(), -std::cos(beta), 1e-15);
  }
}

TEST(HypercycleLeaf, ConcentricAtRightAngle) {
  for (double phi : {0.3, kPi / 4, 1.2, kHalfPi}) {
    const Leaf leaf = leaf_orthogonal_to_hypercycle(phi, 2.5, kHalfPi);
    ASSERT_TRUE(leaf.is_circle());
    EXPECT_NEAR(leaf.circle().center.x, 0.0, 1e-14);
    EXPECT_NEAR(leaf.circle().center.y, 0.0, 1e-14);
    EXPECT_NEAR(leaf.circle().radius, 2.5, 1e-14);
    const IdealEndpoints e = ideal_endpoints(leaf);
    EXPECT_NEAR(e.minus, -2.5, 1e-12);
    EXPECT_NEAR(e.plus, 2.5, 1e-12);
  }
}

TEST(HypercycleLeaf, LowerBoundaryAngleThroughOrigin) {
  for (double phi : {0.3, kPi / 4, 1.2}) {
    const Leaf leaf = leaf_orthogonal_to_hypercycle(phi, 1.7, kHalfPi - phi);
    EXPECT_NEAR(ideal_endpoints(leaf).minus, 0.0, 1e-12);
  }
}

TEST(HypercycleLeaf, QuarterTurnExample) {
  const double phi = kPi / 4;
  const Leaf leaf = leaf_orthogonal_to_hypercycle(phi, 1.0, 2.0 * kPi / 3.0);
  ASSERT_TRUE(leaf.is_circle());
  const Circle& c = leaf.circle();
  EXPECT_NEAR(c.radius, 3.4142, 1e-4);
  EXPECT_NEAR(c.center.x, -1.7071, 1e-4);
  EXPECT_NEAR(c.center.y, -1.7071, 1e-4);
  const IdealEndpoints e = ideal_endpoints(leaf);
  EXPECT_NEAR(e.minus, -4.663902, 1e-6);
  // Closed form s cos(phi - beta) / (sin phi + cos beta) = 1.249689...
  EXPECT_NEAR(e.plus, std::cos(phi - 2 * kPi / 3) / (std::sin(phi) - 0.5), 1e-12);
  EXPECT_NEAR(e.plus, 1.249689, 1e-6);
  for (double a : {e.minus, e.plus}) {
    EXPECT_NEAR(std::hypot(a - c.center.x, c.center.y), c.radius, 1e-12);
  }
  expect_orthogonal_crossing(leaf, {std::sqrt(0.5), std::sqrt(0.5)},
                             {std::cos(phi), std::sin(phi)}, 1e-10);
}

TEST(HypercycleLeaf, UpperBoundaryIsLine) {
  const double phi = 0.6;
  const double s = 2.0;
  const Leaf leaf = leaf_orthogonal_to_hypercycle(phi, s, kHalfPi + phi);
  ASSERT_TRUE(leaf.is_line());
  const Vec2 p{s * std::cos(phi), s * std::sin(phi)};
  expect_orthogonal_crossing(leaf, p, {std::cos(phi), std::sin(phi)}, 1e-12);
  // Boundary crossing at s / cos(phi).
  const IdealEndpoints e = ideal_endpoints(leaf);
  const double x0 = s / std::cos(phi);
  EXPECT_TRUE(std::fabs(e.minus - x0) < 1e-12 || std::fabs(e.plus - x0) < 1e-12);
}

TEST(HypercycleLeaf, AdmissibleIffCosBounded) {
  for (double phi : {0.2, kPi / 6, 1.0, 1.5}) {
    for (int i = 0; i <= 400; ++i) {
      const double beta = kPi * i / 400.0;
      const bool admissible = std::fabs(std::cos(beta)) <= std::sin(phi) - 1e-12;
      const bool outside = std::fabs(std::cos(beta)) >= std::sin(phi) + 1e-12;
      if (admissible) {
        EXPECT_NO_THROW(leaf_orthogonal_to_hypercycle(phi, 1.0, beta)) << phi << " " << beta;
      } else if (outside) {
        EXPECT_THROW(leaf_orthogonal_to_hypercycle(phi, 1.0, beta), DomainError)
            << phi << " " << beta;
      }
    }
  }
}

TEST(HypercycleLeaf, MatchesClosedFormAndCrossesOrthogonally) {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> uphi(0.05, kHalfPi - 0.05), ls(-2.0, 2.0), uu(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double phi = uphi(gen);
    const double s = std::exp(ls(gen));
    const double beta = kHalfPi - phi + 2.0 * phi * (0.001 + 0.998 * uu(gen));
    const Leaf leaf = leaf_orthogonal_to_hypercycle(phi, s, beta);
    const oracle::Carrier ref = oracle::hypercycle_leaf(phi, s, beta);
    expect_carrier_near(leaf, ref, 1e-9 * std::max(1.0, ref.r));
    const Vec2 p{s * std::cos(phi), s * std::sin(phi)};
    ASSERT_TRUE(leaf.crossing().has_value());
    EXPECT_NEAR(leaf.crossing()->x, p.x, 1e-12 * s);
    EXPECT_NEAR(leaf.crossing()->y, p.y, 1e-12 * s);
    expect_orthogonal_crossing(leaf, p, {std::cos(phi), std::sin(phi)}, 1e-10);
    const IdealEndpoints e = ideal_endpoints(leaf);
    const double denom = std::sin(phi) + std::cos(beta);
    EXPECT_NEAR(e.minus, s * std::cos(phi + beta) / denom, 1e-9 * std::max(1.0, ref.r));
    EXPECT_NEAR(e.plus, s * std::cos(phi - beta) / denom, 1e-9 * std::max(1.0, ref.r));
  }
}

TEST(HypercycleLeaf, GeodesicLimit) {
  const double phi = kHalfPi - 1e-6;
  for (double beta : {0.3, 1.0, kHalfPi, 2.0, 2.8}) {
    const Leaf a = leaf_orthogonal_to_hypercycle(phi, 1.3, beta);
    const Leaf b = leaf_orthogonal_to_geodesic(1.3, beta);
    ASSERT_TRUE(a.is_circle() && b.is_circle());
    EXPECT_NEAR(a.circle().center.x, b.circle().center.x, 1e-4);
    EXPECT_NEAR(a.circle().center.y, b.circle().center.y, 1e-4);
    EXPECT_NEAR(a.circle().radius, b.circle().radius, 1e-4);
  }
}

TEST(IdealEndpoints, MetricCircleIsNotALeaf) {
  EXPECT_THROW(Leaf::from_circle({0.0, 3.0}, 1.0), DomainError);
  EXPECT_THROW(Leaf::from_circle({0.0, -3.0}, 1.0), DomainError);
  const Leaf unit = Leaf::from_circle({0.0, 0.0}, 1.0);
  EXPECT_NEAR(unit.beta(), kHalfPi, 1e-15);
  EXPECT_NEAR(ideal_endpoints(unit).minus, -1.0, 1e-15);
}

TEST(DisjointGeodesic, Examples) {
  EXPECT_TRUE(disjoint_geodesic(1.0, kHalfPi, std::exp(1.0), kHalfPi));
  EXPECT_TRUE(disjoint_geodesic(1.0, kPi / 3, 1.05, 2 * kPi / 3));
  EXPECT_FALSE(disjoint_geodesic(1.0, 2 * kPi / 3, 1.05, kPi / 3));
  EXPECT_THROW(disjoint_geodesic(2.0, 1.0, 1.0, 1.0), DomainError);
}

TEST(DisjointHypercycle, Examples) {
  for (double phi : {0.3, kPi / 4, 1.3}) {
    EXPECT_TRUE(disjoint_hypercycle(phi, 1.0, kHalfPi, 2.0, kHalfPi));
  }
  // Equal angles give rescaled, hence nested, leaves.
  const double phi = kPi / 4;
  for (double beta : {kHalfPi - phi + 0.01, 1.2, kHalfPi + phi - 0.01}) {
    EXPECT_TRUE(disjoint_hypercycle(phi, 1.0, beta, 1.5, beta));
    EXPECT_THROW(disjoint_hypercycle(phi, 1.0, beta, 0.5, beta), DomainError);
  }
  EXPECT_THROW(disjoint_hypercycle(phi, 1.0, 0.1, 2.0, kHalfPi), DomainError);
}

TEST(DisjointGeodesic, AgreesWithOracle) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> ls(-2.0, 2.0), lg(0.0, 1.5), ub(0.0, kPi);
  int compared = 0;
  for (int i = 0; i < 10000; ++i) {
    const double s1 = std::exp(ls(gen));
    const double s2 = s1 * std::exp(lg(gen));
    const double b1 = ub(gen), b2 = ub(gen);
    if (b1 == 0.0 || b2 == 0.0 || s1 == s2) continue;
    const double slack = geodesic_disjointness_slack(s1, b1, s2, b2);
    if (std::fabs(slack) < 1e-7) continue;
    const oracle::MeetResult m =
        oracle::meet(oracle::geodesic_leaf(s1, b1), oracle::geodesic_leaf(s2, b2));
    if (m.kind == oracle::Meet::Tangent) continue;
    ++compared;
    const bool oracle_disjoint = m.kind == oracle::Meet::None;
    EXPECT_EQ(disjoint_geodesic(s1, b1, s2, b2), oracle_disjoint)
        << s1 << " " << b1 << " " << s2 << " " << b2 << " slack " << slack;
  }
  EXPECT_GT(compared, 9900);
}

TEST(DisjointHypercycle, AgreesWithOracle) {
  std::mt19937_64 gen(4048);
  std::uniform_real_distribution<double> uphi(0.05, kHalfPi - 0.05), ls(-2.0, 2.0),
      lg(0.0, 1.5), uu(0.0, 1.0);
  int compared = 0;
  for (int i = 0; i < 10000; ++i) {
    const double phi = uphi(gen);
    const double s1 = std::exp(ls(gen));
    const double s2 = s1 * std::exp(lg(gen));
    const double b1 = kHalfPi - phi + 2.0 * phi * uu(gen);
    const double b2 = kHalfPi - phi + 2.0 * phi * uu(gen);
    if (s1 == s2) continue;
    const double slack = hypercycle_disjointness_slack(phi, s1, b1, s2, b2);
    if (std::fabs(slack) < 1e-7) continue;
    const oracle::MeetResult m = oracle::meet(oracle::hypercycle_leaf(phi, s1, b1),
                                              oracle::hypercycle_leaf(phi, s2, b2));
    if (m.kind == oracle::Meet::Tangent) continue;
    ++compared;
    const bool oracle_disjoint = m.kind == oracle::Meet::None;
    EXPECT_EQ(disjoint_hypercycle(phi, s1, b1, s2, b2), oracle_disjoint)
        << phi << " " << s1 << " " << b1 << " " << s2 << " " << b2 << " slack " << slack;
  }
  EXPECT_GT(compared, 9900);
}

TEST(Contact, SelfIsCoincident) {
  const Leaf a = leaf_orthogonal_to_geodesic(1.0, 1.0);
  EXPECT_EQ(upper_halfplane_contact(a, a).kind, ContactKind::Coincident);
  EXPECT_TRUE(intersects_upper_halfplane(a, a));
  const Leaf l = leaf_orthogonal_to_geodesic(2.0, kPi);
  EXPECT_TRUE(intersects_upper_halfplane(l, l));
}

TEST(Contact, ConcentricSemicirclesDisjoint) {
  const Leaf a = leaf_orthogonal_to_geodesic(1.0, kHalfPi);
  const Leaf b = leaf_orthogonal_to_geodesic(2.0, kHalfPi);
  EXPECT_EQ(upper_halfplane_contact(a, b).kind, ContactKind::None);
  EXPECT_FALSE(intersects_upper_halfplane(a, b));
}

TEST(Contact, CrossingPairFromLemmaExample) {
  const Leaf a = leaf_orthogonal_to_geodesic(1.0, 2 * kPi / 3);
  const Leaf b = leaf_orthogonal_to_geodesic(1.05, kPi / 3);
  const Contact c = upper_halfplane_contact(a, b);
  ASSERT_EQ(c.kind, ContactKind::Transverse);
  const oracle::MeetResult m = oracle::meet(oracle::from_leaf(a), oracle::from_leaf(b));
  ASSERT_EQ(m.points.size(), c.points.size());
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    bool matched = false;
    for (const auto& [x, y] : m.points) {
      matched = matched || (std::fabs(x - c.points[i].x) < 1e-10 && std::fabs(y - c.points[i].y) < 1e-10);
    }
    EXPECT_TRUE(matched);
    EXPECT_GT(c.points[i].y, 0.0);
  }
}

TEST(Contact, BoundaryOnlyContactDoesNotCount) {
  // Two pencil leaves share the ideal points +-1 and nothing else.
  const Leaf a = leaf_orthogonal_to_geodesic(1.0, kHalfPi);
  const Leaf b = leaf_orthogonal_to_geodesic(std::exp(1.0), std::acos(std::tanh(1.0)));
  EXPECT_FALSE(intersects_upper_halfplane(a, b));
}

TEST(Contact, TangentCirclesReportedSeparately) {
  const Leaf a = Leaf::from_circle({0.0, 0.0}, 2.0);
  const Leaf b = Leaf::from_circle({0.0, -1.0}, 3.0);  // internally tangent at (0, 2)
  const Contact c = upper_halfplane_contact(a, b);
  EXPECT_EQ(c.kind, ContactKind::Tangent);
  EXPECT_FALSE(intersects_upper_halfplane(a, b));
}

TEST(Contact, CircleLineAndLineLine) {
  const Leaf arc = Leaf::from_circle({0.0, 0.0}, 1.0);
  const Leaf high = leaf_orthogonal_to_geodesic(2.0, kPi);
  const Leaf low = Leaf::from_line({0.0, 0.5}, {1.0, 0.0}, kPi);
  EXPECT_FALSE(intersects_upper_halfplane(arc, high));
  EXPECT_TRUE(intersects_upper_halfplane(arc, low));
  const Leaf ray1 = leaf_orthogonal_to_hypercycle(0.7, 1.0, kHalfPi + 0.7);
  const Leaf ray2 = leaf_orthogonal_to_hypercycle(0.7, 2.0, kHalfPi + 0.7);
  EXPECT_FALSE(intersects_upper_halfplane(ray1, ray2));
  EXPECT_TRUE(intersects_upper_halfplane(ray1, low) ==
              oracle::hits(oracle::from_leaf(ray1), oracle::from_leaf(low)));
}
