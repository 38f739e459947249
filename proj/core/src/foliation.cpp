#include "umbilic/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "umbilic/random.hpp"

namespace umbilic {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string rejection_message(const Verdict& verdict) {
  return "route fails validation with " + std::to_string(verdict.violations.size()) +
         " violation(s); pass force to synthesize anyway";
}

Leaf geodesic_leaf(double t, double h, double tol) {
  double beta = 0.0;
  if (std::fabs(h + 1.0) <= tol) {
    beta = 0.0;
  } else if (std::fabs(h - 1.0) <= tol) {
    beta = kPi;
  } else {
    beta = std::acos(std::clamp(-h, -1.0, 1.0));
  }
  return leaf_orthogonal_to_geodesic(std::exp(t), beta, tol);
}

Leaf hypercycle_leaf(double phi, double t, double h, double tol) {
  const double bound = std::sin(phi);
  if (std::fabs(h) > bound + tol) {
    throw DomainError("sample with |h| > sin(phi) has no leaf crossing the hypercycle once");
  }
  double beta = 0.0;
  if (std::fabs(h + bound) <= tol) {
    beta = kHalfPi - phi;
  } else if (std::fabs(h - bound) <= tol) {
    beta = kHalfPi + phi;
  } else {
    beta = std::acos(-h);
  }
  return leaf_orthogonal_to_hypercycle(phi, std::exp(t * bound), beta, tol);
}

Leaf horocycle_leaf(double height, double t, double h, double tol) {
  if (std::fabs(h) > tol) {
    throw DomainError("leaves orthogonal to a horocycle with h != 0 cross it twice");
  }
  const Vec2 crossing{t, height};
  return Leaf::from_line(crossing, {0.0, 1.0}, kHalfPi, tol).with_crossing(crossing);
}

}  // namespace

RouteRejected::RouteRejected(Verdict verdict)
    : std::runtime_error(rejection_message(verdict)), verdict_(std::move(verdict)) {}

FoliationSlice synthesize(const Route& route, SynthesisOptions options) {
  Verdict verdict = validate(route);
  if (!verdict.valid && !options.force) {
    throw RouteRejected(std::move(verdict));
  }
  const Transversal& tr = route.transversal();
  const double tol = route.tol();
  FoliationSlice slice{tr, {}, {}, std::nullopt};
  slice.leaves.reserve(route.size());
  const auto t = route.t();
  const auto h = route.h();
  for (std::size_t i = 0; i < route.size(); ++i) {
    switch (tr.kind()) {
      case TransversalKind::Geodesic:
        slice.leaves.push_back({t[i], geodesic_leaf(t[i], h[i], tol)});
        break;
      case TransversalKind::Hypercycle:
        slice.leaves.push_back({t[i], hypercycle_leaf(tr.phi(), t[i], h[i], tol)});
        break;
      case TransversalKind::Horocycle:
        slice.leaves.push_back({t[i], horocycle_leaf(tr.height(), t[i], h[i], tol)});
        break;
    }
  }
  return slice;
}

FoliationSlice extend(FoliationSlice slice, ExtensionOptions options) {
  if (slice.transversal.kind() != TransversalKind::Hypercycle || slice.leaves.empty() ||
      options.count == 0) {
    return slice;
  }
  if (!(options.ratio > 1.0)) {
    throw DomainError("extension ratio must exceed 1");
  }
  const double phi = slice.transversal.phi();
  const SliceLeaf& first = slice.leaves.front();
  const SliceLeaf& last = slice.leaves.back();
  const double s_first = slice.transversal.scale_at(first.t);
  const double s_last = slice.transversal.scale_at(last.t);
  double inward = s_first;
  double outward = s_last;
  for (std::size_t j = 0; j < options.count; ++j) {
    inward /= options.ratio;
    outward *= options.ratio;
    slice.extension_leaves.push_back(leaf_orthogonal_to_hypercycle(phi, inward, first.leaf.beta()));
    slice.extension_leaves.push_back(leaf_orthogonal_to_hypercycle(phi, outward, last.leaf.beta()));
  }
  slice.audit.reset();
  return slice;
}

DisjointnessAudit verify_disjoint(const FoliationSlice& slice, double tol) {
  std::vector<const Leaf*> all;
  std::vector<double> times;
  for (const SliceLeaf& sl : slice.leaves) {
    all.push_back(&sl.leaf);
    times.push_back(sl.t);
  }
  for (const Leaf& leaf : slice.extension_leaves) {
    all.push_back(&leaf);
    times.push_back(kNaN);
  }
  DisjointnessAudit audit;
  for (std::size_t j = 0; j < all.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      ++audit.pairs_checked;
      Contact contact = upper_halfplane_contact(*all[i], *all[j], tol, tol);
      switch (contact.kind) {
        case ContactKind::None:
          break;
        case ContactKind::Tangent:
          audit.tangent.push_back({i, j, times[i], times[j], std::move(contact)});
          break;
        case ContactKind::Transverse:
        case ContactKind::Coincident:
          audit.intersecting.push_back({i, j, times[i], times[j], std::move(contact)});
          break;
      }
    }
  }
  return audit;
}

std::string to_string(BuiltinName name) {
  switch (name) {
    case BuiltinName::TotallyGeodesic: return "totally_geodesic";
    case BuiltinName::Horospherical: return "horospherical";
    case BuiltinName::Pencil: return "pencil";
    case BuiltinName::Constant: return "constant";
    case BuiltinName::CustomConstantMax: return "custom_constant_max";
  }
  return "unknown";
}

BuiltinName builtin_from_string(const std::string& name) {
  for (BuiltinName n : {BuiltinName::TotallyGeodesic, BuiltinName::Horospherical,
                        BuiltinName::Pencil, BuiltinName::Constant,
                        BuiltinName::CustomConstantMax}) {
    if (to_string(n) == name) {
      return n;
    }
  }
  throw DomainError("unknown builtin family '" + name + "'");
}

Route builtin(const BuiltinFamily& family, double t0, double t1, std::size_t n, double tol) {
  if (n < 2) {
    throw DomainError("builtin routes need at least two samples");
  }
  if (!(t0 < t1) || !std::isfinite(t0) || !std::isfinite(t1)) {
    throw DomainError("builtin window must satisfy t0 < t1");
  }
  const Transversal& tr = family.transversal;
  const double bound = tr.bound();
  std::vector<double> t(n), h(n), dh(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = i + 1 == n ? t1 : t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n - 1);
    switch (family.name) {
      case BuiltinName::TotallyGeodesic:
        h[i] = 0.0;
        break;
      case BuiltinName::Horospherical:
        h[i] = -bound;
        break;
      case BuiltinName::CustomConstantMax:
        h[i] = bound;
        break;
      case BuiltinName::Constant:
        h[i] = family.constant;
        break;
      case BuiltinName::Pencil:
        if (tr.kind() == TransversalKind::Geodesic) {
          const double th = std::tanh(t[i]);
          h[i] = -th;
          dh[i] = -(1.0 - th * th);
        } else if (tr.kind() == TransversalKind::Hypercycle) {
          h[i] = profile_inverse(tr.phi(), tr.lipschitz() * t[i]);
          dh[i] = rhs_C1(tr.phi(), h[i], tol);
        } else {
          throw DomainError("the pencil family needs a geodesic or hypercycle transversal");
        }
        break;
    }
  }
  return Route(tr, std::move(t), std::move(h), std::move(dh), tol);
}

namespace {

struct Segment {
  std::size_t begin;
  std::size_t end;
};

Route generate_profile_route(const Transversal& tr, UniformSource& rng,
                             const RandomRouteOptions& opt, double excess,
                             std::optional<Segment>* injected) {
  if (tr.kind() == TransversalKind::Horocycle) {
    throw DomainError("random routes need a geodesic or hypercycle transversal");
  }
  if (opt.samples < 8 || !(opt.dt > 0.0)) {
    throw DomainError("random routes need at least 8 samples and a positive step");
  }
  const std::size_t n = opt.samples;
  const double lip = tr.lipschitz();
  const double bound = tr.bound();
  const double t0 = rng.uniform(-2.0, 0.0);

  const auto max_zone = static_cast<std::int64_t>(n / 5);
  std::size_t lower = rng.chance(opt.zone_probability)
                          ? static_cast<std::size_t>(rng.integer(1, max_zone))
                          : 0;
  std::size_t upper = rng.chance(opt.zone_probability)
                          ? static_cast<std::size_t>(rng.integer(1, max_zone))
                          : 0;
  const std::size_t first = lower;
  const std::size_t last = n - upper;  // one past the interior

  std::optional<Segment> segment;
  if (injected) {
    const std::size_t length = static_cast<std::size_t>(rng.integer(2, 6));
    const auto lo = static_cast<std::int64_t>(first + 1);
    const auto hi = static_cast<std::int64_t>(last - 1 - length);
    segment = Segment{static_cast<std::size_t>(rng.integer(lo, hi)), 0};
    segment->end = segment->begin + length;
  }

  std::vector<double> t(n), h(n);
  double profile = rng.uniform(-1.5, 1.5);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = t0 + opt.dt * static_cast<double>(i);
    if (i < first) {
      h[i] = -bound;
      continue;
    }
    if (i >= last) {
      h[i] = bound;
      continue;
    }
    if (i > first) {
      double slope = rng.uniform(-1.5 * lip, lip - opt.margin);
      if (segment && i > segment->begin && i <= segment->end) {
        slope = lip + excess;
      } else if (profile + slope * opt.dt > opt.profile_limit) {
        slope = -rng.uniform(0.0, 1.5 * lip);
      } else if (profile + slope * opt.dt < -opt.profile_limit) {
        slope = rng.uniform(0.0, lip - opt.margin);
      }
      profile += slope * opt.dt;
    }
    h[i] = tr.kind() == TransversalKind::Geodesic ? -std::tanh(profile)
                                                  : profile_inverse(tr.phi(), profile);
  }
  if (injected) {
    *injected = segment;
  }
  return Route(tr, std::move(t), std::move(h));
}

}  // namespace

Route random_valid_route(const Transversal& transversal, std::uint64_t seed,
                         RandomRouteOptions options) {
  UniformSource rng(seed);
  return generate_profile_route(transversal, rng, options, 0.0, nullptr);
}

PerturbedRoute random_violating_route(const Transversal& transversal, std::uint64_t seed,
                                      double excess, RandomRouteOptions options) {
  if (!(excess > 0.0)) {
    throw DomainError("injected slope excess must be positive");
  }
  UniformSource rng(seed);
  std::optional<Segment> segment;
  Route route = generate_profile_route(transversal, rng, options, excess, &segment);
  const auto t = route.t();
  const double begin = t[segment->begin];
  const double end = t[segment->end];
  return {std::move(route), begin, end};
}

}  // namespace umbilic
