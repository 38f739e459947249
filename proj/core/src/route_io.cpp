#include "umbilic/route_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <initializer_list>

#include "json.hpp"

namespace umbilic {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

ParseError::ParseError(std::string path, const std::string& message)
    : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

namespace {

void require_object(const json& j, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  if (!j.is_object()) {
    throw ParseError(path, "expected an object");
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) {
      known = known || key == a;
    }
    if (!known) {
      throw ParseError(path + "." + key, "unknown field");
    }
  }
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) {
    throw ParseError(path, "expected a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw ParseError(path, "expected a finite number");
  }
  return v;
}

std::size_t get_count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) {
    throw ParseError(path, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

Transversal parse_transversal(const json& j, const std::string& path) {
  require_object(j, path, {"kind", "phi", "height"});
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError(path + ".kind", "expected one of geodesic, hypercycle, horocycle");
  }
  const std::string kind = j["kind"].get<std::string>();
  const bool has_phi = j.contains("phi");
  const bool has_height = j.contains("height");
  try {
    if (kind == "geodesic") {
      if (has_phi || has_height) {
        throw ParseError(path + (has_phi ? ".phi" : ".height"), "not allowed for a geodesic");
      }
      return Transversal::geodesic();
    }
    if (kind == "hypercycle") {
      if (!has_phi) {
        throw ParseError(path + ".phi", "required for a hypercycle");
      }
      if (has_height) {
        throw ParseError(path + ".height", "not allowed for a hypercycle");
      }
      return Transversal::hypercycle(get_number(j["phi"], path + ".phi"));
    }
    if (kind == "horocycle") {
      if (!has_height) {
        throw ParseError(path + ".height", "required for a horocycle");
      }
      if (has_phi) {
        throw ParseError(path + ".phi", "not allowed for a horocycle");
      }
      return Transversal::horocycle(get_number(j["height"], path + ".height"));
    }
  } catch (const DomainError& e) {
    throw ParseError(path, e.what());
  }
  throw ParseError(path + ".kind", "expected one of geodesic, hypercycle, horocycle");
}

ClosedFormSpec parse_closed_form(const json& root) {
  const json& cf = root["closed_form"];
  require_object(cf, "$.closed_form", {"name", "params"});
  if (!cf.contains("name") || !cf["name"].is_string()) {
    throw ParseError("$.closed_form.name", "expected a builtin family name");
  }
  ClosedFormSpec spec{};
  try {
    spec.name = builtin_from_string(cf["name"].get<std::string>());
  } catch (const DomainError& e) {
    throw ParseError("$.closed_form.name", e.what());
  }
  if (cf.contains("params")) {
    require_object(cf["params"], "$.closed_form.params", {"c"});
    if (cf["params"].contains("c")) {
      spec.constant = get_number(cf["params"]["c"], "$.closed_form.params.c");
    }
  }
  if (spec.name == BuiltinName::Constant && !spec.constant) {
    throw ParseError("$.closed_form.params.c", "required for the constant family");
  }
  if (spec.name != BuiltinName::Constant && spec.constant) {
    throw ParseError("$.closed_form.params.c", "only the constant family takes a value");
  }
  if (!root.contains("window")) {
    throw ParseError("$.window", "required with closed_form");
  }
  const json& w = root["window"];
  if (!w.is_array() || w.size() != 2) {
    throw ParseError("$.window", "expected [t0, t1]");
  }
  spec.t0 = get_number(w[0], "$.window[0]");
  spec.t1 = get_number(w[1], "$.window[1]");
  if (!(spec.t0 < spec.t1)) {
    throw ParseError("$.window", "expected t0 < t1");
  }
  if (!root.contains("n")) {
    throw ParseError("$.n", "required with closed_form");
  }
  spec.n = get_count(root["n"], "$.n");
  if (spec.n < 2) {
    throw ParseError("$.n", "closed forms need at least two samples");
  }
  return spec;
}

std::vector<SampleRow> parse_samples(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("$.samples", "expected a nonempty array");
  }
  std::vector<SampleRow> rows;
  rows.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string path = "$.samples[" + std::to_string(i) + "]";
    require_object(j[i], path, {"t", "h", "dh"});
    if (!j[i].contains("t")) {
      throw ParseError(path + ".t", "required");
    }
    if (!j[i].contains("h")) {
      throw ParseError(path + ".h", "required");
    }
    SampleRow row{get_number(j[i]["t"], path + ".t"), get_number(j[i]["h"], path + ".h"),
                  std::nullopt};
    if (j[i].contains("dh")) {
      row.dh = get_number(j[i]["dh"], path + ".dh");
    }
    if (i > 0 && !(row.t > rows.back().t)) {
      throw ParseError(path + ".t", "sample times must be strictly increasing");
    }
    if (i > 0 && row.dh.has_value() != rows.front().dh.has_value()) {
      throw ParseError(path + ".dh", "derivatives must be given for all samples or none");
    }
    rows.push_back(row);
  }
  return rows;
}

json finite_or_null(double v) {
  if (!std::isfinite(v)) {
    return nullptr;
  }
  return round12(v);
}

ordered_json transversal_json(const Transversal& tr) {
  ordered_json j;
  j["kind"] = to_string(tr.kind());
  if (tr.kind() == TransversalKind::Hypercycle) {
    j["phi"] = tr.phi();
  } else if (tr.kind() == TransversalKind::Horocycle) {
    j["height"] = tr.height();
  }
  return j;
}

}  // namespace

double round12(double value) {
  if (!std::isfinite(value) || value == 0.0) {
    return value;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

RouteDocument parse_route_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("$", std::string("malformed JSON: ") + e.what());
  }
  require_object(root, "$", {"schema", "transversal", "closed_form", "window", "n", "samples", "tol"});
  if (root.contains("schema") &&
      (!root["schema"].is_string() || root["schema"].get<std::string>() != kRouteSchema)) {
    throw ParseError("$.schema", std::string("expected \"") + kRouteSchema + "\"");
  }
  if (!root.contains("transversal")) {
    throw ParseError("$.transversal", "required");
  }
  RouteDocument doc;
  doc.transversal = parse_transversal(root["transversal"], "$.transversal");

  const bool has_cf = root.contains("closed_form");
  const bool has_samples = root.contains("samples");
  if (has_cf == has_samples) {
    throw ParseError("$", "exactly one of closed_form or samples is required");
  }
  if (has_cf) {
    doc.closed_form = parse_closed_form(root);
  } else {
    if (root.contains("window")) {
      throw ParseError("$.window", "only allowed with closed_form");
    }
    if (root.contains("n")) {
      throw ParseError("$.n", "only allowed with closed_form");
    }
    doc.samples = parse_samples(root["samples"]);
  }
  if (root.contains("tol")) {
    doc.tol = get_number(root["tol"], "$.tol");
    if (!(*doc.tol >= 0.0)) {
      throw ParseError("$.tol", "expected a nonnegative tolerance");
    }
  }
  return doc;
}

Route to_route(const RouteDocument& doc) {
  const double tol = doc.tol.value_or(kDefaultTol);
  if (doc.closed_form) {
    const ClosedFormSpec& cf = *doc.closed_form;
    BuiltinFamily family{cf.name, doc.transversal, cf.constant.value_or(0.0)};
    return builtin(family, cf.t0, cf.t1, cf.n, tol);
  }
  std::vector<double> t, h;
  std::optional<std::vector<double>> dh;
  if (!doc.samples.empty() && doc.samples.front().dh) {
    dh.emplace();
  }
  for (const SampleRow& row : doc.samples) {
    t.push_back(row.t);
    h.push_back(row.h);
    if (dh) {
      dh->push_back(row.dh.value_or(0.0));
    }
  }
  return Route(doc.transversal, std::move(t), std::move(h), std::move(dh), tol);
}

Route parse_route(std::string_view text) { return to_route(parse_route_document(text)); }

std::string serialize(const RouteDocument& doc) {
  ordered_json j;
  j["schema"] = kRouteSchema;
  j["transversal"] = transversal_json(doc.transversal);
  if (doc.closed_form) {
    const ClosedFormSpec& cf = *doc.closed_form;
    ordered_json form;
    form["name"] = to_string(cf.name);
    if (cf.constant) {
      form["params"] = ordered_json{{"c", *cf.constant}};
    }
    j["closed_form"] = form;
    j["window"] = ordered_json::array({cf.t0, cf.t1});
    j["n"] = cf.n;
  } else {
    ordered_json rows = ordered_json::array();
    for (const SampleRow& row : doc.samples) {
      ordered_json r;
      r["t"] = row.t;
      r["h"] = row.h;
      if (row.dh) {
        r["dh"] = *row.dh;
      }
      rows.push_back(r);
    }
    j["samples"] = rows;
  }
  if (doc.tol) {
    j["tol"] = *doc.tol;
  }
  return j.dump(2) + "\n";
}

RouteDocument document_from_route(const Route& route) {
  RouteDocument doc;
  doc.transversal = route.transversal();
  doc.tol = route.tol();
  const auto t = route.t();
  const auto h = route.h();
  for (std::size_t i = 0; i < route.size(); ++i) {
    SampleRow row{t[i], h[i], std::nullopt};
    if (route.has_derivatives()) {
      row.dh = route.dh()[i];
    }
    doc.samples.push_back(row);
  }
  return doc;
}

namespace {

ordered_json verdict_json(const Verdict& verdict, const Transversal& transversal) {
  ordered_json j;
  j["schema"] = kVerdictSchema;
  j["mode"] = to_string(verdict.mode);
  j["transversal"] = transversal_json(transversal);
  j["valid"] = verdict.valid;
  j["zones"] = ordered_json{{"t_minus", finite_or_null(verdict.zones.t_minus)},
                            {"t_plus", finite_or_null(verdict.zones.t_plus)}};
  j["worst_slack"] = finite_or_null(verdict.worst_slack);
  if (verdict.two_sided_lipschitz) {
    j["two_sided_lipschitz"] = *verdict.two_sided_lipschitz;
  }
  ordered_json violations = ordered_json::array();
  for (const Violation& v : verdict.violations) {
    ordered_json row;
    row["kind"] = to_string(v.kind);
    row["t1"] = round12(v.t1);
    row["t2"] = round12(v.t2);
    row["slack"] = finite_or_null(v.slack);
    violations.push_back(row);
  }
  j["violation_count"] = verdict.violations.size();
  j["violations"] = violations;
  ordered_json notes = ordered_json::array();
  for (const Note& n : verdict.notes) {
    notes.push_back(ordered_json{{"code", n.code}, {"detail", n.detail}});
  }
  j["notes"] = notes;
  return j;
}

}  // namespace

std::string verdict_to_json(const Verdict& verdict, const Transversal& transversal) {
  return verdict_json(verdict, transversal).dump(2) + "\n";
}

std::string validation_report_to_json(std::span<const Verdict> verdicts,
                                      const Transversal& transversal) {
  ordered_json j;
  j["schema"] = kValidationSchema;
  bool valid = true;
  ordered_json list = ordered_json::array();
  for (const Verdict& v : verdicts) {
    valid = valid && v.valid;
    list.push_back(verdict_json(v, transversal));
  }
  j["valid"] = valid;
  j["verdicts"] = list;
  return j.dump(2) + "\n";
}

std::string audit_to_json(const DisjointnessAudit& audit, const Transversal& transversal) {
  auto pairs = [](const std::vector<AuditPair>& list) {
    ordered_json out = ordered_json::array();
    for (const AuditPair& p : list) {
      ordered_json row;
      row["first"] = p.first;
      row["second"] = p.second;
      row["t_first"] = finite_or_null(p.t_first);
      row["t_second"] = finite_or_null(p.t_second);
      row["contact"] = to_string(p.contact.kind);
      ordered_json pts = ordered_json::array();
      for (const Vec2& q : p.contact.points) {
        pts.push_back(ordered_json::array({round12(q.x), round12(q.y)}));
      }
      row["points"] = pts;
      out.push_back(row);
    }
    return out;
  };
  ordered_json j;
  j["schema"] = kAuditSchema;
  j["transversal"] = transversal_json(transversal);
  j["clean"] = audit.clean();
  j["pairs_checked"] = audit.pairs_checked;
  j["intersecting"] = pairs(audit.intersecting);
  j["tangent"] = pairs(audit.tangent);
  return j.dump(2) + "\n";
}

}  // namespace umbilic
