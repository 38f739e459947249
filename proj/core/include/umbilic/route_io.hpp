// JSON route documents and JSON reports.
//
// Route document (schema "umbilic.route/1"):
//   {
//     "schema": "umbilic.route/1",                      optional
//     "transversal": {"kind": "geodesic" | "hypercycle" | "horocycle",
//                     "phi": <rad>,                     hypercycle only
//                     "height": <a>},                   horocycle only
//     "closed_form": {"name": <builtin>, "params": {"c": <value>}},
//     "window": [t0, t1], "n": <count>,                 with closed_form
//     "samples": [{"t": .., "h": .., "dh": ..}, ...],   instead of closed_form
//     "tol": <tolerance>                                optional
//   }
// Unknown fields are rejected.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "umbilic/foliation.hpp"
#include "umbilic/route.hpp"

namespace umbilic {

inline constexpr const char* kRouteSchema = "umbilic.route/1";
inline constexpr const char* kVerdictSchema = "umbilic.verdict/1";
inline constexpr const char* kAuditSchema = "umbilic.audit/1";
inline constexpr const char* kValidationSchema = "umbilic.validation/1";

/// Schema violation; `path` locates the offending field ("$.samples[2].t").
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct ClosedFormSpec {
  BuiltinName name;
  std::optional<double> constant;  ///< params.c
  double t0;
  double t1;
  std::size_t n;
};

struct SampleRow {
  double t;
  double h;
  std::optional<double> dh;
};

struct RouteDocument {
  Transversal transversal = Transversal::geodesic();
  std::optional<ClosedFormSpec> closed_form;
  std::vector<SampleRow> samples;
  std::optional<double> tol;
};

RouteDocument parse_route_document(std::string_view text);
/// Expands closed forms via builtin(); enforces Route invariants.
Route to_route(const RouteDocument& document);
Route parse_route(std::string_view text);

/// Canonical serialization: fixed key order, two-space indent, trailing newline.
std::string serialize(const RouteDocument& document);
/// Samples-form document for an arbitrary route.
RouteDocument document_from_route(const Route& route);

/// Verdict report; reals carry 12 significant digits, infinities are null.
std::string verdict_to_json(const Verdict& verdict, const Transversal& transversal);
/// {"schema", "valid", "verdicts": [...]} for one or more verdicts of a route.
std::string validation_report_to_json(std::span<const Verdict> verdicts,
                                      const Transversal& transversal);
std::string audit_to_json(const DisjointnessAudit& audit, const Transversal& transversal);

/// Rounds to 12 significant digits.
double round12(double value);

}  // namespace umbilic
