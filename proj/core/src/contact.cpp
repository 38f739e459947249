#include "umbilic/contact.hpp"

#include <algorithm>
#include <cmath>

namespace umbilic {

std::string to_string(ContactKind kind) {
  switch (kind) {
    case ContactKind::None: return "none";
    case ContactKind::Transverse: return "transverse";
    case ContactKind::Tangent: return "tangent";
    case ContactKind::Coincident: return "coincident";
  }
  return "unknown";
}

namespace {

Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

Contact keep_upper(ContactKind kind, std::initializer_list<Vec2> candidates, double tol) {
  Contact out;
  for (const Vec2& p : candidates) {
    if (p.y > tol) {
      out.points.push_back(p);
    }
  }
  out.kind = out.points.empty() ? ContactKind::None : kind;
  return out;
}

Contact circle_circle(const Circle& c1, const Circle& c2, double tol, double gap) {
  const Vec2 delta = c2.center - c1.center;
  const double d = norm(delta);
  if (d <= gap && std::fabs(c1.radius - c2.radius) <= gap) {
    return {ContactKind::Coincident, {}};
  }
  const double outer = d - (c1.radius + c2.radius);
  const double inner = std::fabs(c1.radius - c2.radius) - d;
  if (outer > gap || inner > gap) {
    return {};
  }
  const Vec2 u = (1.0 / d) * delta;
  if (std::fabs(outer) <= gap) {
    return keep_upper(ContactKind::Tangent, {c1.center + c1.radius * u}, tol);
  }
  if (std::fabs(inner) <= gap) {
    const Vec2 p = c1.radius >= c2.radius ? c1.center + c1.radius * u
                                          : c2.center - c2.radius * u;
    return keep_upper(ContactKind::Tangent, {p}, tol);
  }
  // Radical line: foot at distance a from c1 along u.
  const double a = (c1.radius * c1.radius - c2.radius * c2.radius + d * d) / (2.0 * d);
  const double half = std::sqrt(std::max(0.0, c1.radius * c1.radius - a * a));
  const Vec2 foot = c1.center + a * u;
  return keep_upper(ContactKind::Transverse, {foot + half * perp(u), foot - half * perp(u)}, tol);
}

Contact circle_line(const Circle& c, const Line& l, double tol, double gap) {
  const Vec2 rel = c.center - l.anchor;
  const double dist = cross(l.direction, rel);
  const double off = std::fabs(dist) - c.radius;
  if (off > gap) {
    return {};
  }
  const Vec2 foot = l.anchor + dot(rel, l.direction) * l.direction;
  if (std::fabs(off) <= gap) {
    return keep_upper(ContactKind::Tangent, {foot}, tol);
  }
  const double half = std::sqrt(std::max(0.0, c.radius * c.radius - dist * dist));
  return keep_upper(ContactKind::Transverse,
                    {foot + half * l.direction, foot - half * l.direction}, tol);
}

Contact line_line(const Line& l1, const Line& l2, double tol, double gap) {
  const double cr = cross(l1.direction, l2.direction);
  const Vec2 rel = l2.anchor - l1.anchor;
  if (std::fabs(cr) <= tol) {
    if (std::fabs(cross(l1.direction, rel)) <= gap) {
      return {ContactKind::Coincident, {}};
    }
    return {};
  }
  const double k = cross(rel, l2.direction) / cr;
  return keep_upper(ContactKind::Transverse, {l1.anchor + k * l1.direction}, tol);
}

}  // namespace

Contact upper_halfplane_contact(const Leaf& a, const Leaf& b, double tol, double tangent_gap) {
  if (a.is_circle() && b.is_circle()) {
    return circle_circle(a.circle(), b.circle(), tol, tangent_gap);
  }
  if (a.is_circle()) {
    return circle_line(a.circle(), b.line(), tol, tangent_gap);
  }
  if (b.is_circle()) {
    return circle_line(b.circle(), a.line(), tol, tangent_gap);
  }
  return line_line(a.line(), b.line(), tol, tangent_gap);
}

bool intersects_upper_halfplane(const Leaf& a, const Leaf& b, double tol) {
  const ContactKind kind = upper_halfplane_contact(a, b, tol, tol).kind;
  return kind == ContactKind::Transverse || kind == ContactKind::Coincident;
}

}  // namespace umbilic
