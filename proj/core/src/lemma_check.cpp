#include "umbilic/lemma_check.hpp"

#include <cmath>

#include "umbilic/contact.hpp"
#include "umbilic/leaf.hpp"

namespace umbilic {

namespace {

void evaluate(LeafPairSample& sample, const Leaf& inner, const Leaf& outer, double tol) {
  const ContactKind kind = upper_halfplane_contact(inner, outer, tol, tol).kind;
  sample.oracle_hit = kind == ContactKind::Transverse || kind == ContactKind::Coincident;
  sample.oracle_tangent = kind == ContactKind::Tangent;
}

void ordered_scales(UniformSource& rng, double& s1, double& s2) {
  do {
    s1 = std::exp(rng.uniform(-2.0, 2.0));
    s2 = s1 * std::exp(rng.uniform(0.0, 1.5));
  } while (!(s1 < s2));
}

double open_uniform(UniformSource& rng, double lo, double hi) {
  double v = lo;
  while (v <= lo || v >= hi) {
    v = rng.uniform(lo, hi);
  }
  return v;
}

void tally(LemmaFamilyStats& stats, const LeafPairSample& sample, double margin) {
  ++stats.total;
  if (!(std::fabs(sample.slack) >= margin)) {
    ++stats.within_margin;
    return;
  }
  if (sample.oracle_tangent) {
    ++stats.tangent;
    return;
  }
  ++stats.compared;
  if (sample.predicted == !sample.oracle_hit) {
    ++stats.agreed;
  } else {
    stats.disagreements.push_back(sample);
  }
}

}  // namespace

LeafPairSample random_geodesic_pair(UniformSource& rng, double tol) {
  LeafPairSample p{};
  p.phi = kHalfPi;
  ordered_scales(rng, p.s1, p.s2);
  p.beta1 = open_uniform(rng, 0.0, kPi);
  p.beta2 = open_uniform(rng, 0.0, kPi);
  p.slack = geodesic_disjointness_slack(p.s1, p.beta1, p.s2, p.beta2, 0.0);
  p.predicted = p.slack >= 0.0;
  evaluate(p, leaf_orthogonal_to_geodesic(p.s1, p.beta1, 0.0),
           leaf_orthogonal_to_geodesic(p.s2, p.beta2, 0.0), tol);
  return p;
}

LeafPairSample random_hypercycle_pair(UniformSource& rng, double tol) {
  LeafPairSample p{};
  p.phi = rng.uniform(0.05, kHalfPi - 0.05);
  ordered_scales(rng, p.s1, p.s2);
  p.beta1 = open_uniform(rng, kHalfPi - p.phi, kHalfPi + p.phi);
  p.beta2 = open_uniform(rng, kHalfPi - p.phi, kHalfPi + p.phi);
  p.slack = hypercycle_disjointness_slack(p.phi, p.s1, p.beta1, p.s2, p.beta2, 0.0);
  p.predicted = p.slack >= 0.0;
  evaluate(p, leaf_orthogonal_to_hypercycle(p.phi, p.s1, p.beta1, 0.0),
           leaf_orthogonal_to_hypercycle(p.phi, p.s2, p.beta2, 0.0), tol);
  return p;
}

LemmaCheckReport lemma_check(std::uint64_t seed, std::size_t n, double margin, double tol) {
  LemmaCheckReport report;
  UniformSource rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    tally(report.geodesic, random_geodesic_pair(rng, tol), margin);
  }
  for (std::size_t i = 0; i < n; ++i) {
    tally(report.hypercycle, random_hypercycle_pair(rng, tol), margin);
  }
  return report;
}

}  // namespace umbilic
