// Leaf families generated by routes: synthesis, extension beyond a
// hypercycle band, pairwise disjointness audit, closed-form example routes
// and seeded random route generators.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "umbilic/contact.hpp"
#include "umbilic/leaf.hpp"
#include "umbilic/route.hpp"

namespace umbilic {

struct SliceLeaf {
  double t;
  Leaf leaf;
};

struct AuditPair {
  /// Indices into the combined list: route leaves first, then extension leaves.
  std::size_t first;
  std::size_t second;
  /// Route times of the two leaves; NaN for extension leaves.
  double t_first;
  double t_second;
  Contact contact;
};

struct DisjointnessAudit {
  std::size_t pairs_checked = 0;
  std::vector<AuditPair> intersecting;
  std::vector<AuditPair> tangent;

  bool clean() const { return intersecting.empty(); }
};

struct FoliationSlice {
  Transversal transversal;
  std::vector<SliceLeaf> leaves;
  std::vector<Leaf> extension_leaves;
  std::optional<DisjointnessAudit> audit;
};

/// Thrown by synthesize() for invalid routes unless forced.
class RouteRejected : public std::runtime_error {
 public:
  explicit RouteRejected(Verdict verdict);
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

struct SynthesisOptions {
  /// Build the family even when the route fails validation.
  bool force = false;
};

/// One leaf per sample: the leaf crossing the transversal orthogonally at
/// arc_length_point(t) with mean curvature h(t). Zone samples are snapped to
/// their boundary leaves (tangent circles / lines).
FoliationSlice synthesize(const Route& route, SynthesisOptions options = {});

struct ExtensionOptions {
  std::size_t count = 6;  ///< leaves added on each side
  double ratio = 1.5;     ///< scale step between consecutive added leaves
};

/// Adds equal-angle rescalings of the first and last leaf of a hypercycle
/// slice to fill the regions beyond the band. Geodesic and horocycle slices
/// and empty slices are returned unchanged.
FoliationSlice extend(FoliationSlice slice, ExtensionOptions options = {});

/// Runs the contact oracle over every pair of leaves, extension leaves included.
DisjointnessAudit verify_disjoint(const FoliationSlice& slice, double tol = kDefaultTol);

enum class BuiltinName {
  TotallyGeodesic,     ///< h = 0
  Horospherical,       ///< h = -bound
  Pencil,              ///< extremal route F(h(t)) = L t; h = -tanh(t) on the geodesic
  Constant,            ///< h = constant
  CustomConstantMax,   ///< h = +bound (parallel lines)
};

std::string to_string(BuiltinName name);
BuiltinName builtin_from_string(const std::string& name);

struct BuiltinFamily {
  BuiltinName name;
  Transversal transversal;
  double constant = 0.0;  ///< Constant only
};

/// Samples the closed-form route on n >= 2 equally spaced times in
/// [t0, t1], with exact derivatives.
Route builtin(const BuiltinFamily& family, double t0, double t1, std::size_t n,
              double tol = kDefaultTol);

struct RandomRouteOptions {
  std::size_t samples = 81;
  double dt = 0.05;
  /// Profile slopes stay at or below L - margin.
  double margin = 1e-3;
  /// Profile values are kept in [-profile_limit, profile_limit].
  double profile_limit = 3.0;
  /// Probability of an initial pinned zone and of a final pinned zone.
  double zone_probability = 0.3;
};

/// Route generated in profile space: F(h(t)) is a random walk whose slope
/// never exceeds L - margin, mapped back through the inverse profile.
Route random_valid_route(const Transversal& transversal, std::uint64_t seed,
                         RandomRouteOptions options = {});

struct PerturbedRoute {
  Route route;
  double t_begin;  ///< injected segment [t_begin, t_end]
  double t_end;
};

/// Like random_valid_route, with one interior segment whose profile slope is
/// L + excess.
PerturbedRoute random_violating_route(const Transversal& transversal, std::uint64_t seed,
                                      double excess = 0.5, RandomRouteOptions options = {});

}  // namespace umbilic
