#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "umbilic/foliation.hpp"
#include "umbilic/lemma_check.hpp"
#include "umbilic/route_io.hpp"
#include "umbilic/svg.hpp"

namespace umbilic::cli {

namespace {

struct Options {
  std::string file;
  std::optional<double> tol;
  bool force = false;
  std::uint64_t seed = 7;
  std::size_t n = 10000;
  double margin = 1e-7;
  std::string out_path;
  std::string viewport;
  std::size_t extend_count = 6;
  bool c1 = false;
  // Set once the route file is loaded, for error reports.
  mutable std::optional<Transversal> transversal;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Route load_route(const Options& opt) {
  RouteDocument doc = parse_route_document(read_file(opt.file));
  if (opt.tol) {
    doc.tol = opt.tol;
  }
  opt.transversal = doc.transversal;
  return to_route(doc);
}

// Writes to --out when given, else to the command's stdout.
void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file || !(file << text)) {
    throw std::runtime_error("cannot write '" + opt.out_path + "'");
  }
}

FoliationSlice build_slice(const Route& route, const Options& opt) {
  FoliationSlice slice = synthesize(route, {opt.force});
  return extend(std::move(slice), {opt.extend_count, 1.5});
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const Route route = load_route(opt);
  std::vector<Verdict> verdicts{validate(route)};
  const bool horocycle = route.transversal().kind() == TransversalKind::Horocycle;
  if (!horocycle && (route.has_derivatives() || opt.c1)) {
    verdicts.push_back(validate_C1(route));
  }
  emit(opt, validation_report_to_json(verdicts, route.transversal()), out);
  for (const Verdict& v : verdicts) {
    if (!v.valid) {
      return kExitNegative;
    }
  }
  return kExitOk;
}

int cmd_leaves(const Options& opt, std::ostream& out) {
  const Route route = load_route(opt);
  const FoliationSlice slice = synthesize(route, {opt.force});
  std::ostringstream table;
  table << "# t h beta kind shape x y r a_minus a_plus\n";
  for (const SliceLeaf& sl : slice.leaves) {
    const Leaf& leaf = sl.leaf;
    const IdealEndpoints ends = ideal_endpoints(leaf);
    table << fmt(sl.t) << ' ' << fmt(leaf.h()) << ' ' << fmt(leaf.beta()) << ' '
          << to_string(leaf.kind()) << ' ';
    if (leaf.is_circle()) {
      const Circle& c = leaf.circle();
      table << "circle " << fmt(c.center.x) << ' ' << fmt(c.center.y) << ' ' << fmt(c.radius);
    } else {
      const Line& l = leaf.line();
      table << "line " << fmt(l.anchor.x) << ' ' << fmt(l.anchor.y) << " -";
    }
    table << ' ' << fmt(ends.minus) << ' ' << fmt(ends.plus) << '\n';
  }
  emit(opt, table.str(), out);
  return kExitOk;
}

int cmd_audit(const Options& opt, std::ostream& out) {
  const Route route = load_route(opt);
  const FoliationSlice slice = build_slice(route, opt);
  const DisjointnessAudit audit = verify_disjoint(slice, route.tol());
  emit(opt, audit_to_json(audit, route.transversal()), out);
  return audit.clean() ? kExitOk : kExitNegative;
}

int cmd_render(const Options& opt, std::ostream& out) {
  const Route route = load_route(opt);
  const Viewport vp = opt.viewport.empty() ? Viewport{} : parse_viewport(opt.viewport);
  emit(opt, render_svg(build_slice(route, opt), vp), out);
  return kExitOk;
}

int cmd_examples(std::ostream& out) {
  struct Row {
    BuiltinName name;
    const char* formula;
    const char* transversals;
  };
  const Row rows[] = {
      {BuiltinName::TotallyGeodesic, "h = 0", "geodesic, hypercycle, horocycle"},
      {BuiltinName::Horospherical, "h = -bound", "geodesic, hypercycle"},
      {BuiltinName::Pencil, "F(h) = L t (geodesic: h = -tanh t)", "geodesic, hypercycle"},
      {BuiltinName::Constant, "h = c (params.c)", "geodesic, hypercycle, horocycle"},
      {BuiltinName::CustomConstantMax, "h = +bound", "geodesic, hypercycle"},
  };
  for (const Row& r : rows) {
    out << to_string(r.name) << "\n  " << r.formula << "\n  transversals: " << r.transversals
        << '\n';
  }
  out << "\nexample route file:\n"
      << "{\"transversal\": {\"kind\": \"geodesic\"}, \"closed_form\": {\"name\": \"pencil\"},"
         " \"window\": [-3, 3], \"n\": 121}\n";
  return kExitOk;
}

void print_family(const char* label, const LemmaFamilyStats& s, std::ostream& out) {
  out << label << ": agreement " << s.agreed << '/' << s.compared
      << " outside the tangency margin (" << s.within_margin << " within margin, " << s.tangent
      << " tangent, " << s.total << " total)\n";
  for (const LeafPairSample& d : s.disagreements) {
    out << "  disagreement phi=" << fmt(d.phi) << " s1=" << fmt(d.s1) << " beta1=" << fmt(d.beta1)
        << " s2=" << fmt(d.s2) << " beta2=" << fmt(d.beta2) << " slack=" << fmt(d.slack) << '\n';
  }
}

int cmd_lemma_check(const Options& opt, std::ostream& out) {
  const LemmaCheckReport report = lemma_check(opt.seed, opt.n, opt.margin);
  out << "seed " << opt.seed << ", " << opt.n << " tuples per family\n";
  print_family("geodesic", report.geodesic, out);
  print_family("hypercycle", report.hypercycle, out);
  return report.geodesic.perfect() && report.hypercycle.perfect() ? kExitOk : kExitNegative;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Totally umbilical foliations of the hyperbolic half-plane", "umbilic"};
  app.require_subcommand(1);

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("FILE", opt.file, "route document (JSON)")->required();
    sub->add_option("--tol", opt.tol, "override the route tolerance");
    sub->add_option("--out", opt.out_path, "write output to PATH instead of stdout");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "validate a route; exit 2 if invalid");
  add_file(validate_cmd);
  validate_cmd->add_flag("--c1", opt.c1, "also run the differential check without derivatives");

  CLI::App* leaves_cmd = app.add_subcommand("leaves", "print the leaf parameter table");
  add_file(leaves_cmd);
  leaves_cmd->add_flag("--force", opt.force, "synthesize even when validation fails");

  CLI::App* audit_cmd = app.add_subcommand("audit", "check leaves pairwise; exit 2 on contact");
  add_file(audit_cmd);
  audit_cmd->add_flag("--force", opt.force, "synthesize even when validation fails");
  audit_cmd->add_option("--extend", opt.extend_count, "extension leaves per side (hypercycle)");

  CLI::App* render_cmd = app.add_subcommand("render", "write an SVG figure of the leaves");
  add_file(render_cmd);
  render_cmd->add_flag("--force", opt.force, "synthesize even when validation fails");
  render_cmd->add_option("--extend", opt.extend_count, "extension leaves per side (hypercycle)");
  render_cmd->add_option("--viewport", opt.viewport, "xmin,xmax,ymax,W,H");

  CLI::App* examples_cmd = app.add_subcommand("examples", "list builtin route families");

  CLI::App* lemma_cmd =
      app.add_subcommand("lemma-check", "compare disjointness criteria with the contact oracle");
  lemma_cmd->add_option("--seed", opt.seed, "random seed");
  lemma_cmd->add_option("--n", opt.n, "tuples per family")->check(CLI::PositiveNumber);
  lemma_cmd->add_option("--margin", opt.margin, "slack margin excluded from comparison");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(opt, out);
    if (leaves_cmd->parsed()) return cmd_leaves(opt, out);
    if (audit_cmd->parsed()) return cmd_audit(opt, out);
    if (render_cmd->parsed()) return cmd_render(opt, out);
    if (examples_cmd->parsed()) return cmd_examples(out);
    if (lemma_cmd->parsed()) return cmd_lemma_check(opt, out);
  } catch (const RouteRejected& e) {
    err << "error: " << e.what() << '\n'
        << validation_report_to_json(std::vector<Verdict>{e.verdict()},
                                     opt.transversal.value_or(Transversal::geodesic()));
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace umbilic::cli
