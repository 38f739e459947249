// Brute-force contact test between two leaves, independent of the closed-form
// disjointness criteria: it solves the carrier equations directly.
#pragma once

#include <vector>

#include "umbilic/leaf.hpp"

namespace umbilic {

enum class ContactKind {
  None,        ///< no common point with y > tol
  Transverse,  ///< crossing point(s) in the open half-plane
  Tangent,     ///< touching point in the open half-plane, no crossing
  Coincident,  ///< identical carriers
};

std::string to_string(ContactKind kind);

struct Contact {
  ContactKind kind = ContactKind::None;
  /// Common points with y > tol (empty for None and Coincident).
  std::vector<Vec2> points;
};

/// Classifies the common points of two leaves in the open upper half-plane.
/// Contacts whose carrier gap is below `tangent_gap` are Tangent.
Contact upper_halfplane_contact(const Leaf& a, const Leaf& b, double tol = kDefaultTol,
                                double tangent_gap = kDefaultTol);

/// True for Transverse and Coincident contacts.
bool intersects_upper_halfplane(const Leaf& a, const Leaf& b, double tol = kDefaultTol);

}  // namespace umbilic
