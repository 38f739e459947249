// Mean-curvature routes along a transversal and their validation.
//
// A route samples t -> h(t), the mean curvature of the leaf crossing the
// transversal at arc length t. Along a geodesic or phi-hypercycle a route is
// realizable by a totally umbilical foliation iff
//   - |h| <= bound (1 for the geodesic, sin(phi) for a hypercycle),
//   - h is pinned at -bound on an initial zone and at +bound on a final zone,
//   - between the zones the profile F(h(t)) grows no faster than L * t,
//     with L = 1 (geodesic) or sin(phi) (hypercycle).
// For differentiable routes the last condition reads h' >= rhs_C1(phi, h).
// Along a horocycle the only route is h = 0.
#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "umbilic/halfplane.hpp"

namespace umbilic {

class Route {
 public:
  /// Checks: equal lengths, at least one sample, finite values, strictly
  /// increasing t, |h| <= 1 + tol. The transversal-specific bound is left to
  /// the validators so that out-of-bound routes yield a verdict.
  Route(Transversal transversal, std::vector<double> t, std::vector<double> h,
        std::optional<std::vector<double>> dh = std::nullopt, double tol = kDefaultTol);

  const Transversal& transversal() const { return transversal_; }
  std::size_t size() const { return t_.size(); }
  std::span<const double> t() const { return t_; }
  std::span<const double> h() const { return h_; }
  bool has_derivatives() const { return dh_.has_value(); }
  /// Derivative samples. Throws DomainError when absent.
  std::span<const double> dh() const;
  double tol() const { return tol_; }

 private:
  Transversal transversal_;
  std::vector<double> t_;
  std::vector<double> h_;
  std::optional<std::vector<double>> dh_;
  double tol_;
};

struct Zones {
  double t_minus = -std::numeric_limits<double>::infinity();
  double t_plus = std::numeric_limits<double>::infinity();
};

enum class ViolationKind {
  Bound,      ///< |h| above the transversal bound
  Zone,       ///< a pinned sample out of order
  Pair,       ///< profile grows faster than L between two samples
  Pointwise,  ///< derivative below rhs_C1
};

std::string to_string(ViolationKind kind);

/// Violated inequality. Pointwise and bound violations have t1 == t2.
struct Violation {
  ViolationKind kind;
  double t1;
  double t2;
  double slack;  ///< signed margin, negative
};

struct Note {
  std::string code;
  std::string detail;
};

enum class ValidationMode { C0, C1, Horocycle };

std::string to_string(ValidationMode mode);

struct Verdict {
  ValidationMode mode = ValidationMode::C0;
  bool valid = true;
  Zones zones;
  /// Smallest margin over all checked inequalities; +inf when nothing binds.
  double worst_slack = std::numeric_limits<double>::infinity();
  /// Sorted by (t1, t2).
  std::vector<Violation> violations;
  std::vector<Note> notes;
  /// C0 only: whether |F(h(t2)) - F(h(t1))| <= L (t2 - t1) also holds.
  std::optional<bool> two_sided_lipschitz;

  const Note* find_note(const std::string& code) const;
};

/// Route profile ln[(sin phi - h) / (h cos phi + sqrt(1 - h^2) sin phi)] for
/// phi in (0, pi/2]. Equals -ath(h) at phi = pi/2. Diverges to -inf at
/// h = sin phi and to +inf at h = -sin phi; |h| > sin phi + tol throws.
double profile_F(double phi, double h, double tol = kDefaultTol);

/// Inverse of profile_F in h; +-inf map to -+sin(phi).
double profile_inverse(double phi, double value);

/// Lower bound on h' for differentiable routes:
/// (h - sin phi)(h cos phi + w sin phi) w / (1 - h sin phi + w cos phi),
/// w = sqrt(1 - h^2). Equals h^2 - 1 at phi = pi/2.
double rhs_C1(double phi, double h, double tol = kDefaultTol);

/// The same bound in terms of beta' (h = -cos beta): -sin(beta) on the
/// geodesic, (sin phi + cos beta) cos(phi + beta) / (1 + sin(phi + beta))
/// otherwise.
double angle_rate_bound(double phi, double beta, double tol = kDefaultTol);

Zones detect_zones(const Route& route);

Verdict validate_C0(const Route& route);
Verdict validate_C1(const Route& route);
Verdict validate_horocycle(const Route& route);
/// validate_horocycle for horocycle routes, validate_C0 otherwise.
Verdict validate(const Route& route);

/// Second-order central differences on a possibly nonuniform grid,
/// one-sided at the ends.
std::vector<double> central_differences(std::span<const double> t, std::span<const double> h);

/// max over samples of h^2 + k^2, with k = cos(phi) the geodesic curvature of
/// the transversal (0 for the geodesic).
double curvature_budget(const Route& route);

}  // namespace umbilic
