#include "umbilic/halfplane.hpp"

#include <cmath>
#include <limits>

namespace umbilic {

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a) { return std::hypot(a.x, a.y); }

HPoint::HPoint(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0)) {
    throw DomainError("HPoint requires finite coordinates with y > 0");
  }
}

IdealPoint IdealPoint::at(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("finite ideal point requires a finite abscissa");
  }
  return IdealPoint(x, false);
}

IdealPoint IdealPoint::infinity() { return IdealPoint(0.0, true); }

double IdealPoint::x() const {
  if (infinite_) {
    throw DomainError("the point at infinity has no abscissa");
  }
  return x_;
}

std::string to_string(TransversalKind kind) {
  switch (kind) {
    case TransversalKind::Geodesic: return "geodesic";
    case TransversalKind::Hypercycle: return "hypercycle";
    case TransversalKind::Horocycle: return "horocycle";
  }
  return "unknown";
}

Transversal Transversal::geodesic() { return {TransversalKind::Geodesic, kHalfPi, 0.0}; }

Transversal Transversal::hypercycle(double phi) {
  if (!(phi > 0.0 && phi < kHalfPi)) {
    throw DomainError("hypercycle angle must lie in (0, pi/2)");
  }
  return {TransversalKind::Hypercycle, phi, 0.0};
}

Transversal Transversal::horocycle(double height) {
  if (!(height > 0.0) || !std::isfinite(height)) {
    throw DomainError("horocycle height must be positive");
  }
  return {TransversalKind::Horocycle, 0.0, height};
}

double Transversal::phi() const {
  if (kind_ == TransversalKind::Horocycle) {
    throw DomainError("a horocycle transversal has no hypercycle angle");
  }
  return phi_;
}

double Transversal::height() const {
  if (kind_ != TransversalKind::Horocycle) {
    throw DomainError("only horocycle transversals carry a height");
  }
  return height_;
}

double Transversal::bound() const {
  switch (kind_) {
    case TransversalKind::Geodesic: return 1.0;
    case TransversalKind::Hypercycle: return std::sin(phi_);
    case TransversalKind::Horocycle: return 0.0;
  }
  return 0.0;
}

double Transversal::lipschitz() const {
  if (kind_ == TransversalKind::Horocycle) {
    throw DomainError("horocycle routes have no Lipschitz profile");
  }
  return kind_ == TransversalKind::Geodesic ? 1.0 : std::sin(phi_);
}

double Transversal::scale_at(double t) const {
  switch (kind_) {
    case TransversalKind::Geodesic: return std::exp(t);
    case TransversalKind::Hypercycle: return std::exp(t * std::sin(phi_));
    case TransversalKind::Horocycle: break;
  }
  throw DomainError("horocycle transversals have no radial scale");
}

double ath(double t) {
  if (!(std::fabs(t) < 1.0)) {
    throw DomainError("ath requires |t| < 1");
  }
  return std::log(std::sqrt((1.0 + t) / (1.0 - t)));
}

double hyperbolic_distance(const HPoint& p, const HPoint& q) {
  const double dx = p.x() - q.x();
  const double gap2 = dx * dx + (p.y() - q.y()) * (p.y() - q.y());
  const double mirror2 = dx * dx + (p.y() + q.y()) * (p.y() + q.y());
  const double ratio = std::sqrt(gap2 / mirror2);
  // Far-apart points round the ratio to 1.
  if (ratio >= 1.0) {
    return std::acosh(1.0 + gap2 / (2.0 * p.y() * q.y()));
  }
  return 2.0 * ath(ratio);
}

HPoint arc_length_point(const Transversal& transversal, double t) {
  switch (transversal.kind()) {
    case TransversalKind::Geodesic:
      return {0.0, std::exp(t)};
    case TransversalKind::Hypercycle: {
      const double phi = transversal.phi();
      const double r = std::exp(t * std::sin(phi));
      return {r * std::cos(phi), r * std::sin(phi)};
    }
    case TransversalKind::Horocycle:
      return {t, transversal.height()};
  }
  throw DomainError("unknown transversal kind");
}

MobiusMap::MobiusMap(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(det > 0.0) || !std::isfinite(det)) {
    throw DomainError("Mobius map must have positive determinant ad - bc");
  }
  const double k = 1.0 / std::sqrt(det);
  a_ = a * k;
  b_ = b * k;
  c_ = c * k;
  d_ = d * k;
}

MobiusMap MobiusMap::identity() { return {1.0, 0.0, 0.0, 1.0}; }
MobiusMap MobiusMap::translation(double dx) { return {1.0, dx, 0.0, 1.0}; }

MobiusMap MobiusMap::scaling(double k) {
  if (!(k > 0.0)) {
    throw DomainError("scaling factor must be positive");
  }
  return {k, 0.0, 0.0, 1.0};
}

MobiusMap MobiusMap::compose(const MobiusMap& inner) const {
  return {a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
          c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_};
}

MobiusMap MobiusMap::inverse() const { return {d_, -b_, -c_, a_}; }

HPoint MobiusMap::apply(const HPoint& p) const {
  // (a z + b) / (c z + d) with z = x + i y; the denominator never vanishes
  // for y > 0 because c and d are real and not both zero.
  const double nx = a_ * p.x() + b_;
  const double ny = a_ * p.y();
  const double dx = c_ * p.x() + d_;
  const double dy = c_ * p.y();
  const double den = dx * dx + dy * dy;
  const double x = (nx * dx + ny * dy) / den;
  // Imaginary part equals (ad - bc) y / |cz + d|^2 = y / den.
  const double y = p.y() / den;
  return {x, y};
}

IdealPoint MobiusMap::apply(const IdealPoint& p) const {
  if (p.is_infinity()) {
    if (c_ == 0.0) {
      return IdealPoint::infinity();
    }
    return IdealPoint::at(a_ / c_);
  }
  const double den = c_ * p.x() + d_;
  if (den == 0.0) {
    return IdealPoint::infinity();
  }
  return IdealPoint::at((a_ * p.x() + b_) / den);
}

CurveDescription CurveDescription::geodesic(IdealPoint start, IdealPoint end) {
  return {TransversalKind::Geodesic, start, end, kHalfPi, 1.0};
}

CurveDescription CurveDescription::hypercycle(IdealPoint start, IdealPoint end, double angle) {
  return {TransversalKind::Hypercycle, start, end, angle, 1.0};
}

CurveDescription CurveDescription::horocycle(IdealPoint tangency, double size) {
  return {TransversalKind::Horocycle, tangency, tangency, kHalfPi, size};
}

namespace {

// Orientation-preserving map with start -> 0 and end -> infinity.
MobiusMap endpoints_to_axis(const IdealPoint& start, const IdealPoint& end, double tol) {
  if (start.is_infinity() && end.is_infinity()) {
    throw DegenerateInputError("curve endpoints coincide");
  }
  if (end.is_infinity()) {
    return MobiusMap::translation(-start.x());
  }
  if (start.is_infinity()) {
    // z -> -1 / (z - q)
    return {0.0, -1.0, 1.0, -end.x()};
  }
  const double p = start.x();
  const double q = end.x();
  if (std::fabs(p - q) <= tol) {
    throw DegenerateInputError("curve endpoints coincide");
  }
  // +-(z - p) / (z - q), sign chosen for a positive determinant.
  if (q > p) {
    return {-1.0, p, 1.0, -q};
  }
  return {1.0, -p, 1.0, -q};
}

}  // namespace

Normalization canonical_isometry(const CurveDescription& curve, double tol) {
  switch (curve.kind) {
    case TransversalKind::Geodesic:
      return {endpoints_to_axis(curve.start, curve.end, tol), Transversal::geodesic(), false};

    case TransversalKind::Hypercycle: {
      if (!(curve.angle > 0.0 && curve.angle < kPi)) {
        throw DomainError("hypercycle angle must lie in (0, pi)");
      }
      const MobiusMap to_axis = endpoints_to_axis(curve.start, curve.end, tol);
      if (std::fabs(curve.angle - kHalfPi) <= tol) {
        return {to_axis, Transversal::geodesic(), false};
      }
      if (curve.angle < kHalfPi) {
        return {to_axis, Transversal::hypercycle(curve.angle), false};
      }
      // z -> -1/z turns the ray at angle theta into the ray at pi - theta
      // and swaps the two ends.
      const MobiusMap flip{0.0, -1.0, 1.0, 0.0};
      return {flip.compose(to_axis), Transversal::hypercycle(kPi - curve.angle), true};
    }

    case TransversalKind::Horocycle: {
      if (!(curve.size > 0.0)) {
        throw DegenerateInputError("horocycle size must be positive");
      }
      if (curve.start.is_infinity()) {
        return {MobiusMap::scaling(1.0 / curve.size), Transversal::horocycle(1.0), false};
      }
      // z -> -D / (z - p) sends the circle of diameter D tangent at p to y = 1.
      return {MobiusMap{0.0, -curve.size, 1.0, -curve.start.x()}, Transversal::horocycle(1.0),
              false};
    }
  }
  throw DomainError("unknown curve kind");
}

}  // namespace umbilic
