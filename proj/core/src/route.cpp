#include "umbilic/route.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace umbilic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_phi(double phi) {
  if (!(phi > 0.0 && phi <= kHalfPi)) {
    throw DomainError("transversal angle must lie in (0, pi/2]");
  }
}

enum class SampleClass { Lower, Interior, Upper, OutOfBound };

SampleClass classify(double h, double bound, double tol) {
  if (std::fabs(h) > bound + tol) {
    return SampleClass::OutOfBound;
  }
  if (std::fabs(h + bound) <= tol) {
    return SampleClass::Lower;
  }
  if (std::fabs(h - bound) <= tol) {
    return SampleClass::Upper;
  }
  return SampleClass::Interior;
}

struct Scan {
  std::vector<SampleClass> classes;
  std::vector<Violation> violations;
  double worst = kInf;
};

// Bound and zone-order checks shared by the C0 and C1 validators.
Scan scan_structure(const Route& route) {
  const double bound = route.transversal().bound();
  const double tol = route.tol();
  const auto t = route.t();
  const auto h = route.h();
  Scan scan;
  scan.classes.reserve(route.size());
  for (std::size_t i = 0; i < route.size(); ++i) {
    scan.classes.push_back(classify(h[i], bound, tol));
    if (scan.classes.back() == SampleClass::OutOfBound) {
      const double slack = bound - std::fabs(h[i]);
      scan.violations.push_back({ViolationKind::Bound, t[i], t[i], slack});
      scan.worst = std::min(scan.worst, slack);
    }
  }
  for (std::size_t j = 0; j < route.size(); ++j) {
    const SampleClass cj = scan.classes[j];
    if (cj == SampleClass::OutOfBound) {
      continue;
    }
    for (std::size_t i = 0; i < j; ++i) {
      const SampleClass ci = scan.classes[i];
      if (ci == SampleClass::OutOfBound) {
        continue;
      }
      double slack = 0.0;
      if (cj == SampleClass::Lower && ci != SampleClass::Lower) {
        slack = -(h[i] + bound);
      } else if (ci == SampleClass::Upper && cj != SampleClass::Upper) {
        slack = -(bound - h[j]);
      } else {
        continue;
      }
      scan.violations.push_back({ViolationKind::Zone, t[i], t[j], slack});
      scan.worst = std::min(scan.worst, slack);
    }
  }
  return scan;
}

void finish(Verdict& verdict, Scan& scan, const Route& route) {
  verdict.zones = detect_zones(route);
  verdict.worst_slack = std::min(verdict.worst_slack, scan.worst);
  verdict.violations.insert(verdict.violations.end(), scan.violations.begin(),
                            scan.violations.end());
  std::sort(verdict.violations.begin(), verdict.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.t1, a.t2, a.kind) < std::tie(b.t1, b.t2, b.kind);
            });
  verdict.valid = verdict.violations.empty();
  verdict.notes.push_back(
      {"finite_window", "conditions checked on the sampled window only; tails are not constrained"});
}

void require_not_horocycle(const Route& route) {
  if (route.transversal().kind() == TransversalKind::Horocycle) {
    throw DomainError("horocycle routes are checked by validate_horocycle");
  }
}

}  // namespace

Route::Route(Transversal transversal, std::vector<double> t, std::vector<double> h,
             std::optional<std::vector<double>> dh, double tol)
    : transversal_(transversal), t_(std::move(t)), h_(std::move(h)), dh_(std::move(dh)),
      tol_(tol) {
  if (!(tol_ >= 0.0) || !std::isfinite(tol_)) {
    throw DomainError("route tolerance must be finite and nonnegative");
  }
  if (t_.empty() || t_.size() != h_.size()) {
    throw DomainError("route needs equally many (and at least one) t and h samples");
  }
  if (dh_ && dh_->size() != t_.size()) {
    throw DomainError("derivative samples must align with the route samples");
  }
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (!std::isfinite(t_[i]) || !std::isfinite(h_[i]) || (dh_ && !std::isfinite((*dh_)[i]))) {
      throw DomainError("route samples must be finite");
    }
    if (i > 0 && !(t_[i] > t_[i - 1])) {
      throw DomainError("route sample times must be strictly increasing");
    }
    if (std::fabs(h_[i]) > 1.0 + tol_) {
      throw DomainError("route mean curvature exceeds 1: no generalized hypersphere has it");
    }
  }
}

std::span<const double> Route::dh() const {
  if (!dh_) {
    throw DomainError("route carries no derivative samples");
  }
  return *dh_;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Bound: return "bound";
    case ViolationKind::Zone: return "zone";
    case ViolationKind::Pair: return "pair";
    case ViolationKind::Pointwise: return "pointwise";
  }
  return "unknown";
}

std::string to_string(ValidationMode mode) {
  switch (mode) {
    case ValidationMode::C0: return "C0";
    case ValidationMode::C1: return "C1";
    case ValidationMode::Horocycle: return "horocycle";
  }
  return "unknown";
}

const Note* Verdict::find_note(const std::string& code) const {
  for (const Note& n : notes) {
    if (n.code == code) {
      return &n;
    }
  }
  return nullptr;
}

double profile_F(double phi, double h, double tol) {
  require_phi(phi);
  const double s = std::sin(phi);
  if (std::fabs(h) > s + tol) {
    throw DomainError("profile_F requires |h| <= sin(phi)");
  }
  if (h >= s) {
    return -kInf;
  }
  if (h <= -s) {
    return kInf;
  }
  const double w = std::sqrt((1.0 - h) * (1.0 + h));
  const double num = s - h;
  const double den = h * std::cos(phi) + w * s;
  if (!(den > 0.0)) {
    return kInf;
  }
  return std::log(num / den);
}

double profile_inverse(double phi, double value) {
  require_phi(phi);
  const double s = std::sin(phi);
  if (std::isnan(value)) {
    throw DomainError("profile value is NaN");
  }
  if (value == kInf) {
    return -s;
  }
  if (value == -kInf) {
    return s;
  }
  // Solve cos(phi + beta) = -k (sin phi + cos beta) with k = e^{-value}:
  // (cos phi + k) cos beta - sin phi sin beta = -k sin phi.
  const double k = std::exp(-value);
  if (!std::isfinite(k)) {
    return s;
  }
  const double a = std::cos(phi) + k;
  const double m = std::hypot(a, s);
  const double psi = std::atan2(s, a);
  const double beta = std::acos(std::clamp(-k * s / m, -1.0, 1.0)) - psi;
  return std::clamp(-std::cos(beta), -s, s);
}

double rhs_C1(double phi, double h, double tol) {
  require_phi(phi);
  const double s = std::sin(phi);
  if (std::fabs(h) > s + tol) {
    throw DomainError("rhs_C1 requires |h| <= sin(phi)");
  }
  h = std::clamp(h, -s, s);
  if (h >= s) {
    return 0.0;
  }
  const double c = std::cos(phi);
  const double w = std::sqrt((1.0 - h) * (1.0 + h));
  return (h - s) * (h * c + w * s) * w / (1.0 - h * s + w * c);
}

double angle_rate_bound(double phi, double beta, double tol) {
  require_phi(phi);
  if (!(beta >= 0.0 && beta <= kPi)) {
    throw DomainError("boundary angle must lie in [0, pi]");
  }
  if (beta < kHalfPi - phi - tol || beta > kHalfPi + phi + tol) {
    throw DomainError("boundary angle outside [pi/2 - phi, pi/2 + phi]");
  }
  if (phi == kHalfPi) {
    return -std::sin(beta);
  }
  return (std::sin(phi) + std::cos(beta)) * std::cos(phi + beta) / (1.0 + std::sin(phi + beta));
}

Zones detect_zones(const Route& route) {
  Zones zones;
  if (route.transversal().kind() == TransversalKind::Horocycle) {
    return zones;
  }
  const double bound = route.transversal().bound();
  const double tol = route.tol();
  const auto t = route.t();
  const auto h = route.h();
  for (std::size_t i = 0; i < route.size() && std::fabs(h[i] + bound) <= tol; ++i) {
    zones.t_minus = t[i];
  }
  for (std::size_t i = route.size(); i-- > 0 && std::fabs(h[i] - bound) <= tol;) {
    zones.t_plus = t[i];
  }
  return zones;
}

Verdict validate_C0(const Route& route) {
  require_not_horocycle(route);
  Verdict verdict;
  verdict.mode = ValidationMode::C0;
  Scan scan = scan_structure(route);

  const double phi = route.transversal().phi();
  const double lip = route.transversal().lipschitz();
  const double tol = route.tol();
  const auto t = route.t();
  const auto h = route.h();
  const bool geodesic = route.transversal().kind() == TransversalKind::Geodesic;

  std::vector<std::size_t> interior;
  std::vector<double> profile;
  for (std::size_t i = 0; i < route.size(); ++i) {
    if (scan.classes[i] == SampleClass::Interior) {
      interior.push_back(i);
      profile.push_back(geodesic ? -ath(h[i]) : profile_F(phi, h[i], tol));
    }
  }

  bool two_sided = true;
  for (std::size_t b = 0; b < interior.size(); ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      const double span = lip * (t[interior[b]] - t[interior[a]]);
      const double rise = profile[b] - profile[a];
      const double slack = span - rise;
      verdict.worst_slack = std::min(verdict.worst_slack, slack);
      if (slack < -tol) {
        verdict.violations.push_back({ViolationKind::Pair, t[interior[a]], t[interior[b]], slack});
      }
      if (span + rise < -tol) {
        two_sided = false;
      }
    }
  }
  verdict.two_sided_lipschitz = two_sided;
  finish(verdict, scan, route);
  verdict.notes.push_back({"two_sided_lipschitz", two_sided ? "holds" : "fails"});
  return verdict;
}

Verdict validate_C1(const Route& route) {
  require_not_horocycle(route);
  Verdict verdict;
  verdict.mode = ValidationMode::C1;
  Scan scan = scan_structure(route);

  const double phi = route.transversal().phi();
  const double tol = route.tol();
  const auto t = route.t();
  const auto h = route.h();
  std::vector<double> estimated;
  std::span<const double> dh;
  if (route.has_derivatives()) {
    dh = route.dh();
  } else {
    estimated = central_differences(t, h);
    dh = estimated;
    verdict.notes.push_back(
        {"derivatives_estimated", "h' taken from central differences on the sample grid"});
  }

  for (std::size_t i = 0; i < route.size(); ++i) {
    if (scan.classes[i] != SampleClass::Interior) {
      continue;
    }
    const double slack = dh[i] - rhs_C1(phi, h[i], tol);
    verdict.worst_slack = std::min(verdict.worst_slack, slack);
    if (slack < -tol) {
      verdict.violations.push_back({ViolationKind::Pointwise, t[i], t[i], slack});
    }
  }
  finish(verdict, scan, route);
  return verdict;
}

Verdict validate_horocycle(const Route& route) {
  if (route.transversal().kind() != TransversalKind::Horocycle) {
    throw DomainError("validate_horocycle needs a horocycle transversal");
  }
  Verdict verdict;
  verdict.mode = ValidationMode::Horocycle;
  const auto t = route.t();
  const auto h = route.h();
  for (std::size_t i = 0; i < route.size(); ++i) {
    const double slack = -std::fabs(h[i]);
    verdict.worst_slack = std::min(verdict.worst_slack, slack);
    if (slack < -route.tol()) {
      verdict.violations.push_back({ViolationKind::Bound, t[i], t[i], slack});
    }
  }
  verdict.valid = verdict.violations.empty();
  verdict.notes.push_back({"horocycle", "the only route along a horocycle is h = 0"});
  return verdict;
}

Verdict validate(const Route& route) {
  if (route.transversal().kind() == TransversalKind::Horocycle) {
    return validate_horocycle(route);
  }
  return validate_C0(route);
}

std::vector<double> central_differences(std::span<const double> t, std::span<const double> h) {
  const std::size_t n = t.size();
  if (n != h.size()) {
    throw DomainError("central_differences needs aligned samples");
  }
  std::vector<double> d(n, 0.0);
  if (n < 2) {
    return d;
  }
  if (n == 2) {
    d.front() = d.back() = (h[1] - h[0]) / (t[1] - t[0]);
    return d;
  }
  // Second-order one-sided stencils at the window ends.
  const auto edge = [](double y0, double y1, double y2, double a, double b) {
    return -(2 * a + b) / (a * (a + b)) * y0 + (a + b) / (a * b) * y1 - a / (b * (a + b)) * y2;
  };
  d.front() = edge(h[0], h[1], h[2], t[1] - t[0], t[2] - t[1]);
  d.back() = -edge(h[n - 1], h[n - 2], h[n - 3], t[n - 1] - t[n - 2], t[n - 2] - t[n - 3]);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double d0 = t[i] - t[i - 1];
    const double d1 = t[i + 1] - t[i];
    const double fwd = (h[i + 1] - h[i]) / d1;
    const double bwd = (h[i] - h[i - 1]) / d0;
    d[i] = (fwd * d0 + bwd * d1) / (d0 + d1);
  }
  return d;
}

double curvature_budget(const Route& route) {
  double k = 1.0;
  if (route.transversal().kind() != TransversalKind::Horocycle) {
    k = route.transversal().kind() == TransversalKind::Geodesic
            ? 0.0
            : std::cos(route.transversal().phi());
  }
  double worst = 0.0;
  for (double h : route.h()) {
    worst = std::max(worst, h * h + k * k);
  }
  return worst;
}

}  // namespace umbilic
