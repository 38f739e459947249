// Generalized hypercycles (leaves) orthogonal to the canonical transversals.
#pragma once

#include <optional>
#include <string>
#include <variant>

#include "umbilic/halfplane.hpp"

namespace umbilic {

enum class LeafKind { Horosphere, Hypersphere, TotallyGeodesic };

std::string to_string(LeafKind kind);

struct Circle {
  Vec2 center;
  double radius = 0.0;
};

/// Straight carrier through `anchor` with unit `direction`.
struct Line {
  Vec2 anchor;
  Vec2 direction;
};

/// A generalized hypercycle: the part of a circle or line in y > 0, tagged
/// with the angle beta it makes with the ideal boundary (measured outside)
/// and its mean curvature h = -cos(beta).
class Leaf {
 public:
  /// Circle carrier. beta defaults to arccos(center.y / R); an explicit beta
  /// must agree with it. Rejects metric circles (contained in y > 0) and
  /// circles missing y > 0.
  static Leaf from_circle(Vec2 center, double radius, std::optional<double> beta = std::nullopt,
                          double tol = kDefaultTol);
  /// Line carrier with explicit boundary angle. Horizontal lines require beta = pi.
  static Leaf from_line(Vec2 anchor, Vec2 direction, double beta, double tol = kDefaultTol);

  bool is_circle() const { return std::holds_alternative<Circle>(shape_); }
  bool is_line() const { return std::holds_alternative<Line>(shape_); }
  const Circle& circle() const;
  const Line& line() const;

  double beta() const { return beta_; }
  double h() const { return h_; }
  LeafKind kind() const { return kind_; }

  /// Point where the leaf meets its transversal, when built against one.
  const std::optional<Vec2>& crossing() const { return crossing_; }
  Leaf with_crossing(Vec2 p) const;

 private:
  Leaf(std::variant<Circle, Line> shape, double beta, double tol);

  std::variant<Circle, Line> shape_;
  double beta_;
  double h_;
  LeafKind kind_;
  std::optional<Vec2> crossing_;
};

/// Intersection of a leaf's carrier with the ideal boundary. Infinite ends
/// are reported as -inf / +inf.
struct IdealEndpoints {
  double minus;
  double plus;
};

/// h = -cos(beta), beta in [0, pi].
double mean_curvature_from_angle(double beta);
/// beta = arccos(-h), |h| <= 1.
double angle_from_mean_curvature(double h);

/// Distance of a hypersphere of angle beta from its totally geodesic core,
/// ath(cos beta). Returns +inf for beta = 0 and -inf for beta = pi.
double equidistant_offset(double beta);

LeafKind classify_leaf(double beta, double tol = kDefaultTol);

/// Leaf orthogonal to the vertical axis at (0, s), meeting the boundary at
/// angle beta. beta = pi gives the horizontal line y = s.
Leaf leaf_orthogonal_to_geodesic(double s, double beta, double tol = kDefaultTol);

/// Leaf orthogonal to the ray at angle phi at s (cos phi, sin phi).
/// Admissible angles are |cos beta| <= sin phi; beta = pi/2 + phi gives the
/// straight line perpendicular to the ray.
Leaf leaf_orthogonal_to_hypercycle(double phi, double s, double beta, double tol = kDefaultTol);

IdealEndpoints ideal_endpoints(const Leaf& leaf, double tol = kDefaultTol);

/// Log-scale margin ln(s2 tan(beta2/2)) - ln(s1 tan(beta1/2)) of the
/// disjointness criterion for geodesic-orthogonal leaves (nonnegative iff
/// disjoint). Horizontal-line and tangent cases evaluate to +-inf.
double geodesic_disjointness_slack(double s1, double beta1, double s2, double beta2,
                                   double tol = kDefaultTol);
/// cot(beta2/2) / cot(beta1/2) <= s2 / s1, for 0 < s1 < s2. Equality within
/// tol (boundary contact only) counts as disjoint.
bool disjoint_geodesic(double s1, double beta1, double s2, double beta2, double tol = kDefaultTol);

/// Distance of the left boundary point a_- of a hypercycle-orthogonal leaf
/// from the origin, in units of s: -cos(phi + beta) / (sin phi + cos beta).
/// +inf for the line case beta = pi/2 + phi.
double hypercycle_left_reach(double phi, double beta, double tol = kDefaultTol);

/// Log-scale margin ln(s2 * reach2) - ln(s1 * reach1); nonnegative iff the
/// left boundary point of the outer leaf lies left of that of the inner one.
double hypercycle_disjointness_slack(double phi, double s1, double beta1, double s2, double beta2,
                                     double tol = kDefaultTol);
/// Disjointness of two leaves orthogonal to the phi-hypercycle, 0 < s1 < s2.
bool disjoint_hypercycle(double phi, double s1, double beta1, double s2, double beta2,
                         double tol = kDefaultTol);

}  // namespace umbilic
