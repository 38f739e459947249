// Agreement statistics between the closed-form disjointness criteria and the
// brute-force contact oracle on random admissible leaf pairs.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "umbilic/halfplane.hpp"
#include "umbilic/random.hpp"

namespace umbilic {

struct LeafPairSample {
  double phi;  ///< pi/2 for the geodesic family
  double s1, beta1, s2, beta2;
  double slack;        ///< closed-form margin, nonnegative iff disjoint
  bool predicted;      ///< closed-form verdict: disjoint
  bool oracle_hit;     ///< oracle found a crossing or coincidence in y > 0
  bool oracle_tangent; ///< oracle saw only a tangency in y > 0
};

struct LemmaFamilyStats {
  std::size_t total = 0;
  std::size_t within_margin = 0;  ///< |slack| below the margin, not compared
  std::size_t tangent = 0;        ///< tangent contacts, not compared
  std::size_t compared = 0;
  std::size_t agreed = 0;
  std::vector<LeafPairSample> disagreements;

  bool perfect() const { return agreed == compared; }
};

struct LemmaCheckReport {
  LemmaFamilyStats geodesic;
  LemmaFamilyStats hypercycle;
};

/// Random tuple with 0 < s1 < s2 and angles in the open admissible range.
LeafPairSample random_geodesic_pair(UniformSource& rng, double tol = kDefaultTol);
LeafPairSample random_hypercycle_pair(UniformSource& rng, double tol = kDefaultTol);

/// Draws n tuples per family and compares predicate and oracle on all tuples
/// whose |slack| is at least `margin`.
LemmaCheckReport lemma_check(std::uint64_t seed, std::size_t n, double margin = 1e-7,
                             double tol = kDefaultTol);

}  // namespace umbilic
