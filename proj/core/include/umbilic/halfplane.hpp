// Primitive geometry of the upper half-plane model of the hyperbolic plane.
//
// Everything is computed in the two-dimensional cross-section {(x, y) : y > 0}
// with metric |dz|^2 / y^2. Higher-dimensional half-spaces are recovered by
// rotation about the vertical axis and are not modelled explicitly.
#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace umbilic {

/// Default tolerance for geometric coincidence and route checks.
inline constexpr double kDefaultTol = 1e-9;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2;

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input that does not determine a unique object (coincident endpoints, ...).
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Plain Euclidean coordinate pair. Used for centers and directions, which
/// may lie anywhere in the plane.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

double dot(Vec2 a, Vec2 b);
double cross(Vec2 a, Vec2 b);
double norm(Vec2 a);

/// Interior point of the half-plane; y > 0 is enforced on construction.
class HPoint {
 public:
  HPoint(double x, double y);

  double x() const { return x_; }
  double y() const { return y_; }
  Vec2 vec() const { return {x_, y_}; }

  friend bool operator==(const HPoint&, const HPoint&) = default;

 private:
  double x_;
  double y_;
};

/// Point of the ideal boundary: a real abscissa on y = 0, or the point at
/// infinity. Never mixed with interior points.
class IdealPoint {
 public:
  static IdealPoint at(double x);
  static IdealPoint infinity();

  bool is_infinity() const { return infinite_; }
  /// Abscissa of a finite ideal point. Throws DomainError for infinity.
  double x() const;

  friend bool operator==(const IdealPoint&, const IdealPoint&) = default;

 private:
  IdealPoint(double x, bool infinite) : x_(x), infinite_(infinite) {}
  double x_;
  bool infinite_;
};

enum class TransversalKind { Geodesic, Hypercycle, Horocycle };

std::string to_string(TransversalKind kind);

/// One of the three canonical transversal curves:
///  - Geodesic: the positive vertical axis, t -> (0, e^t);
///  - Hypercycle(phi): the ray at angle phi in (0, pi/2), t -> e^{t sin phi} (cos phi, sin phi);
///  - Horocycle(a): the horizontal line y = a, t -> (t, a).
class Transversal {
 public:
  static Transversal geodesic();
  static Transversal hypercycle(double phi);
  static Transversal horocycle(double height);

  TransversalKind kind() const { return kind_; }
  /// Angle with the ideal boundary: pi/2 for the geodesic.
  double phi() const;
  /// Height of the horocycle. Throws DomainError for other kinds.
  double height() const;

  /// Largest admissible |h| of an umbilical route: 1, sin(phi) or 0.
  double bound() const;
  /// Lipschitz constant of the route profile: 1 or sin(phi).
  double lipschitz() const;
  /// Scale factor s(t) at which the transversal crosses the leaf of time t:
  /// e^t for the geodesic, e^{t sin phi} for a hypercycle.
  double scale_at(double t) const;

  friend bool operator==(const Transversal&, const Transversal&) = default;

 private:
  Transversal(TransversalKind kind, double phi, double height)
      : kind_(kind), phi_(phi), height_(height) {}
  TransversalKind kind_;
  double phi_;
  double height_;
};

/// Inverse hyperbolic tangent, ln sqrt((1 + t) / (1 - t)). Requires |t| < 1.
double ath(double t);

/// Hyperbolic distance 2 ath sqrt(|p - q|^2 / |p - conj(q)|^2).
double hyperbolic_distance(const HPoint& p, const HPoint& q);

/// Unit-speed parametrization of a canonical transversal.
HPoint arc_length_point(const Transversal& transversal, double t);

/// Orientation-preserving fractional-linear map z -> (a z + b) / (c z + d)
/// with real coefficients, stored normalized to ad - bc = 1.
class MobiusMap {
 public:
  MobiusMap(double a, double b, double c, double d);

  static MobiusMap identity();
  static MobiusMap translation(double dx);
  static MobiusMap scaling(double k);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  /// (*this) after (inner): z -> this(inner(z)).
  MobiusMap compose(const MobiusMap& inner) const;
  MobiusMap inverse() const;

  HPoint apply(const HPoint& p) const;
  IdealPoint apply(const IdealPoint& p) const;

 private:
  double a_, b_, c_, d_;
};

/// A curve to be normalized: a geodesic or hypercycle given by its ideal
/// endpoints (traversed from start to end), or a horocycle given by its
/// point of tangency and Euclidean size (diameter for a finite tangency
/// point, height for the point at infinity).
struct CurveDescription {
  TransversalKind kind;
  IdealPoint start;
  IdealPoint end;
  /// Angle in (0, pi) between the curve and the boundary, measured so that
  /// after sending start -> 0 and end -> infinity the curve becomes the ray
  /// at this angle. Ignored for geodesics.
  double angle = kHalfPi;
  /// Horocycles only.
  double size = 1.0;

  static CurveDescription geodesic(IdealPoint start, IdealPoint end);
  static CurveDescription hypercycle(IdealPoint start, IdealPoint end, double angle);
  static CurveDescription horocycle(IdealPoint tangency, double size);
};

struct Normalization {
  MobiusMap map;
  Transversal canonical;
  /// True when the map swaps the ends, so the canonical parameter runs
  /// against the described direction of travel.
  bool reversed = false;
};

/// Isometry sending the described curve onto its canonical transversal.
/// Horocycles are normalized to height 1.
Normalization canonical_isometry(const CurveDescription& curve, double tol = kDefaultTol);

}  // namespace umbilic
