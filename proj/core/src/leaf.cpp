#include "umbilic/leaf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace umbilic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_angle(double beta) {
  if (!(beta >= 0.0 && beta <= kPi)) {
    throw DomainError("boundary angle must lie in [0, pi]");
  }
}

void require_scale(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError("crossing scale s must be positive and finite");
  }
}

}  // namespace

std::string to_string(LeafKind kind) {
  switch (kind) {
    case LeafKind::Horosphere: return "horosphere";
    case LeafKind::Hypersphere: return "hypersphere";
    case LeafKind::TotallyGeodesic: return "totally_geodesic";
  }
  return "unknown";
}

Leaf::Leaf(std::variant<Circle, Line> shape, double beta, double tol)
    : shape_(shape),
      beta_(beta),
      h_(mean_curvature_from_angle(beta)),
      kind_(classify_leaf(beta, tol)) {}

Leaf Leaf::from_circle(Vec2 center, double radius, std::optional<double> beta, double tol) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !std::isfinite(center.x) ||
      !std::isfinite(center.y)) {
    throw DomainError("circle leaf needs a finite center and positive radius");
  }
  if (center.y - radius > tol * std::max(1.0, radius)) {
    throw DomainError("metric circle inside the half-plane is not a leaf");
  }
  if (center.y + radius <= 0.0) {
    throw DomainError("circle does not reach the upper half-plane");
  }
  const double cos_beta = std::clamp(center.y / radius, -1.0, 1.0);
  if (beta) {
    require_angle(*beta);
    if (std::fabs(std::cos(*beta) - cos_beta) > 1e-8) {
      throw DomainError("boundary angle disagrees with the circle geometry");
    }
    return Leaf(Circle{center, radius}, *beta, tol);
  }
  return Leaf(Circle{center, radius}, std::acos(cos_beta), tol);
}

Leaf Leaf::from_line(Vec2 anchor, Vec2 direction, double beta, double tol) {
  require_angle(beta);
  const double len = norm(direction);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw DomainError("line leaf needs a nonzero direction");
  }
  const Vec2 unit = (1.0 / len) * direction;
  if (std::fabs(unit.y) <= tol) {
    if (std::fabs(beta - kPi) > tol) {
      throw DomainError("horizontal line leaves must have beta = pi");
    }
    if (!(anchor.y > 0.0)) {
      throw DomainError("horizontal line leaf must lie in the upper half-plane");
    }
  } else if (std::fabs(std::sin(beta) - std::fabs(unit.y)) > 1e-8) {
    throw DomainError("boundary angle disagrees with the line direction");
  }
  return Leaf(Line{anchor, unit}, beta, tol);
}

const Circle& Leaf::circle() const {
  if (!is_circle()) {
    throw DomainError("leaf is not a circle");
  }
  return std::get<Circle>(shape_);
}

const Line& Leaf::line() const {
  if (!is_line()) {
    throw DomainError("leaf is not a line");
  }
  return std::get<Line>(shape_);
}

Leaf Leaf::with_crossing(Vec2 p) const {
  Leaf copy = *this;
  copy.crossing_ = p;
  return copy;
}

double mean_curvature_from_angle(double beta) {
  require_angle(beta);
  return -std::cos(beta);
}

double angle_from_mean_curvature(double h) {
  if (!(std::fabs(h) <= 1.0)) {
    throw DomainError("mean curvature of a leaf must satisfy |h| <= 1");
  }
  return std::acos(-h);
}

double equidistant_offset(double beta) {
  require_angle(beta);
  if (beta == 0.0) {
    return kInf;
  }
  if (beta == kPi) {
    return -kInf;
  }
  const double c = std::cos(beta);
  if (std::fabs(c) >= 1.0) {
    return c > 0 ? kInf : -kInf;
  }
  return ath(c);
}

LeafKind classify_leaf(double beta, double tol) {
  if (std::fabs(beta) <= tol || std::fabs(beta - kPi) <= tol) {
    return LeafKind::Horosphere;
  }
  if (std::fabs(beta - kHalfPi) <= tol) {
    return LeafKind::TotallyGeodesic;
  }
  return LeafKind::Hypersphere;
}

Leaf leaf_orthogonal_to_geodesic(double s, double beta, double tol) {
  require_scale(s);
  require_angle(beta);
  const Vec2 crossing{0.0, s};
  if (kPi - beta <= tol) {
    return Leaf::from_line(crossing, {1.0, 0.0}, kPi, tol).with_crossing(crossing);
  }
  const double c = std::cos(beta);
  const double radius = s / (1.0 + c);
  const Vec2 center{0.0, s * c / (1.0 + c)};
  return Leaf::from_circle(center, radius, beta, tol).with_crossing(crossing);
}

Leaf leaf_orthogonal_to_hypercycle(double phi, double s, double beta, double tol) {
  if (!(phi > 0.0 && phi <= kHalfPi)) {
    throw DomainError("hypercycle angle must lie in (0, pi/2]");
  }
  require_scale(s);
  require_angle(beta);
  const double sin_phi = std::sin(phi);
  const double cos_phi = std::cos(phi);
  const double lo = kHalfPi - phi;
  const double hi = kHalfPi + phi;
  if (beta < lo - tol || beta > hi + tol) {
    throw DomainError("boundary angle outside [pi/2 - phi, pi/2 + phi]: leaf would cut the "
                      "hypercycle twice");
  }
  beta = std::clamp(beta, lo, hi);
  const Vec2 ray{cos_phi, sin_phi};
  const Vec2 crossing = s * ray;
  if (hi - beta <= tol) {
    return Leaf::from_line(crossing, {-sin_phi, cos_phi}, hi, tol).with_crossing(crossing);
  }
  const double den = sin_phi + std::cos(beta);
  const double radius = s * sin_phi / den;
  const Vec2 center = (s * std::cos(beta) / den) * ray;
  return Leaf::from_circle(center, radius, beta, tol).with_crossing(crossing);
}

IdealEndpoints ideal_endpoints(const Leaf& leaf, double /*tol*/) {
  if (leaf.is_circle()) {
    const Circle& c = leaf.circle();
    // x = cx +- sqrt(R^2 - cy^2), factored for accuracy near tangency.
    const double disc = (c.radius - c.center.y) * (c.radius + c.center.y);
    const double half = std::sqrt(std::max(0.0, disc));
    return {c.center.x - half, c.center.x + half};
  }
  const Line& l = leaf.line();
  if (std::fabs(l.direction.y) == 0.0 || leaf.beta() == kPi) {
    return {-kInf, kInf};
  }
  const double x0 = l.anchor.x - l.anchor.y * l.direction.x / l.direction.y;
  // Upward direction decides which end escapes to infinity.
  const double up_x = l.direction.y > 0 ? l.direction.x : -l.direction.x;
  if (up_x < 0.0) {
    return {-kInf, x0};
  }
  return {x0, kInf};
}

namespace {

// ln(s2 * reach2) - ln(s1 * reach1) with reach in [0, +inf].
double log_reach_slack(double s1, double reach1, double s2, double reach2) {
  if (reach1 == kInf) {
    return reach2 == kInf ? kInf : -kInf;
  }
  if (reach2 == kInf || reach1 == 0.0) {
    return kInf;
  }
  if (reach2 == 0.0) {
    return -kInf;
  }
  return std::log(s2 / s1) + std::log(reach2 / reach1);
}

void require_ordered(double s1, double s2) {
  require_scale(s1);
  require_scale(s2);
  if (!(s1 < s2)) {
    throw DomainError("disjointness predicates require 0 < s1 < s2");
  }
}

double half_angle_reach(double beta, double tol) {
  require_angle(beta);
  if (kPi - beta <= tol) {
    return kInf;
  }
  if (beta <= tol) {
    return 0.0;
  }
  return std::tan(beta / 2.0);
}

}  // namespace

double geodesic_disjointness_slack(double s1, double beta1, double s2, double beta2, double tol) {
  require_ordered(s1, s2);
  return log_reach_slack(s1, half_angle_reach(beta1, tol), s2, half_angle_reach(beta2, tol));
}

bool disjoint_geodesic(double s1, double beta1, double s2, double beta2, double tol) {
  return geodesic_disjointness_slack(s1, beta1, s2, beta2, tol) >= -tol;
}

double hypercycle_left_reach(double phi, double beta, double tol) {
  if (!(phi > 0.0 && phi <= kHalfPi)) {
    throw DomainError("hypercycle angle must lie in (0, pi/2]");
  }
  require_angle(beta);
  const double lo = kHalfPi - phi;
  const double hi = kHalfPi + phi;
  if (beta < lo - tol || beta > hi + tol) {
    throw DomainError("boundary angle outside [pi/2 - phi, pi/2 + phi]");
  }
  if (hi - beta <= tol) {
    return kInf;
  }
  if (beta - lo <= tol) {
    return 0.0;
  }
  return -std::cos(phi + beta) / (std::sin(phi) + std::cos(beta));
}

double hypercycle_disjointness_slack(double phi, double s1, double beta1, double s2, double beta2,
                                     double tol) {
  require_ordered(s1, s2);
  return log_reach_slack(s1, hypercycle_left_reach(phi, beta1, tol), s2,
                         hypercycle_left_reach(phi, beta2, tol));
}

bool disjoint_hypercycle(double phi, double s1, double beta1, double s2, double beta2,
                         double tol) {
  return hypercycle_disjointness_slack(phi, s1, beta1, s2, beta2, tol) >= -tol;
}

}  // namespace umbilic
