#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <hyperex/hyperex.hpp>

#include "report.hpp"
#include "verify.hpp"

namespace hyperex::cli {
namespace {

struct Output {
  bool json = false;
  bool no_meta = false;
};

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_flag("--json", o.json, "Print the run report as JSON");
  cmd->add_flag("--no-meta", o.no_meta, "Zero the wall-clock field so reports are byte-stable");
}

std::string brief(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string fixed15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// ---------------------------------------------------------------- constants

struct ConstantsArgs {
  int d = 0;
  int p = 0;
  double s = 1.0;
  std::string sheet = "one";
  bool csv = false;
  bool has_d = false;
  bool has_p = false;
};

int cmd_constants(const ConstantsArgs& args, RunReport& report, std::ostream& text) {
  const auto sheet = functionals::parse_sheet_count(args.sheet);
  report.inputs["s"] = args.s;
  report.inputs["sheet"] = args.sheet;

  std::vector<functionals::SharpConstant> rows;
  if (args.has_d || args.has_p) {
    if (!(args.has_d && args.has_p)) throw ValidationError("--d and --p must be given together");
    report.inputs["d"] = args.d;
    report.inputs["p"] = args.p;
    rows.push_back(functionals::best_constant(args.d, args.p, args.s, sheet));
  } else {
    rows = functionals::constants_table(args.s);
  }

  Json list = Json::array();
  for (const auto& c : rows) {
    list.push_back({{"d", c.d},
                    {"p", c.p},
                    {"s", c.s},
                    {"sheet", functionals::to_string(c.sheet)},
                    {"symbolic", c.symbolic},
                    {"value", c.value}});
  }
  report.outputs["constants"] = list;

  if (args.csv) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& c : rows) {
      cells.push_back({std::to_string(c.d), std::to_string(c.p), format_number(c.s),
                       std::string(functionals::to_string(c.sheet)), c.symbolic, format_number(c.value)});
    }
    write_csv(text, {"d", "p", "s", "sheet", "symbolic", "value"}, cells);
  } else if (rows.size() == 1) {
    text << rows.front().symbolic << " = " << fixed15(rows.front().value) << '\n';
  } else {
    char line[160];
    std::snprintf(line, sizeof line, "%-2s %-2s %-6s %-36s %s\n", "d", "p", "sheet", "symbolic", "value");
    text << line;
    for (const auto& c : rows) {
      std::snprintf(line, sizeof line, "%-2d %-2d %-6s %-36s %s\n", c.d, c.p,
                    std::string(functionals::to_string(c.sheet)).c_str(), c.symbolic.c_str(),
                    fixed15(c.value).c_str());
      text << line;
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------- curve

struct CurveArgs {
  int d = 2;
  int p = 4;
  double s = 1.0;
  double a_min = 1e-3;
  double a_max = 1e2;
  std::size_t points = 50;
  bool log_spacing = false;
  std::string method = "auto";
  std::string out;
};

int cmd_curve(const CurveArgs& args, RunReport& report, std::ostream& text, bool json) {
  if (!(args.a_min > 0.0) || !(args.a_min < args.a_max)) {
    throw ValidationError("need 0 < --a-min < --a-max");
  }
  if (args.points < 2) throw ValidationError("--points must be at least 2");
  const auto method = args.method == "auto"
                          ? (args.d == 2 ? functionals::Method::closed : functionals::Method::quadrature)
                          : functionals::parse_method(args.method);
  const double limit = functionals::best_constant(args.d, args.p, args.s).value;
  const auto grid = functionals::make_grid(args.a_min, args.a_max, args.points, args.log_spacing);
  const auto scan = functionals::monotonicity_scan(args.d, args.p, args.s, grid, method);

  report.inputs = {{"d", args.d},           {"p", args.p},
                   {"s", args.s},           {"a_min", args.a_min},
                   {"a_max", args.a_max},   {"points", args.points},
                   {"log_spacing", args.log_spacing}, {"method", functionals::to_string(method)}};

  std::vector<std::vector<std::string>> cells;
  Json curve = Json::array();
  double worst_error = 0.0;
  for (const auto& pt : scan.points) {
    cells.push_back({format_number(pt.a), format_number(pt.q_value), format_number(limit),
                     format_number(pt.q_value / limit)});
    curve.push_back({{"a", pt.a}, {"q_value", pt.q_value}, {"limit_value", limit}, {"ratio", pt.q_value / limit}});
    worst_error = std::max(worst_error, pt.error);
  }
  report.outputs["limit_value"] = limit;
  report.outputs["expected_trend"] = functionals::to_string(scan.expected);
  report.outputs["observed_trend"] = functionals::to_string(scan.observed);
  report.outputs["strictly_monotone"] = scan.strict;
  report.outputs["curve"] = curve;
  report.error_estimates["q_value_max_abs"] = worst_error;

  const std::vector<std::string> header{"a", "q_value", "limit_value", "ratio"};
  if (!args.out.empty()) {
    std::ofstream file(args.out);
    if (!file) throw ValidationError("cannot open '" + args.out + "' for writing");
    write_csv(file, header, cells);
    report.outputs["csv"] = args.out;
    text << "wrote " << cells.size() << " rows to " << args.out << '\n'
         << "trend: observed " << functionals::to_string(scan.observed) << ", expected "
         << functionals::to_string(scan.expected) << (scan.strict ? " (strict)" : "") << '\n';
  } else if (!json) {
    write_csv(text, header, cells);
  }
  return kSuccess;
}

// ---------------------------------------------------------------- conv

struct ConvArgs {
  int d = 2;
  int n = 2;
  double s = 1.0;
  std::string xi;
  double tau = 0.0;
  std::string method = "closed";
};

geometry::Vector parse_vector(const std::string& text, int d) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse --xi component '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v)) {
      throw ValidationError("cannot parse --xi component '" + item + "'");
    }
    values.push_back(v);
  }
  if (static_cast<int>(values.size()) != d) {
    throw ValidationError("--xi needs " + std::to_string(d) + " comma-separated components");
  }
  geometry::Vector out(d);
  for (int i = 0; i < d; ++i) out[i] = values[static_cast<std::size_t>(i)];
  return out;
}

int cmd_conv(const ConvArgs& args, RunReport& report, std::ostream& text) {
  if (args.method != "closed" && args.method != "oracle") {
    throw ValidationError("--method must be closed or oracle");
  }
  const measures::ConvClosedForm form{args.d, args.n, args.s};
  form.validate();
  const geometry::SpacetimePoint p{parse_vector(args.xi, args.d), args.tau};
  report.inputs = {{"d", args.d}, {"n", args.n}, {"s", args.s}, {"xi", std::vector<double>(p.xi.begin(), p.xi.end())},
                   {"tau", args.tau}, {"method", args.method}};

  const double ns = args.n * args.s;
  const bool inside = geometry::in_convolution_region(p, args.n, args.s);
  const double gap = p.interval() - ns * ns;
  const bool near_boundary = inside && gap < 1e-6 * (1.0 + args.tau * args.tau);
  const double value = measures::conv_closed(form, p);

  report.outputs["value"] = value;
  report.outputs["support"] = inside ? "inside" : "outside-support";
  report.outputs["boundary_warning"] = near_boundary;
  text << "value = " << format_number(value) << '\n';
  if (!inside) text << "note: outside-support\n";
  if (near_boundary) text << "warning: point is within 1e-6 of the support boundary\n";

  if (args.method == "oracle") {
    double oracle = 0.0;
    double error = 0.0;
    if (inside) {
      const auto r = measures::conv_point_oracle({{args.d, args.s}, measures::Sheet::plus}, args.n, p, {});
      oracle = r.value;
      error = r.error;
      report.outputs["oracle_ill_conditioned"] = r.ill_conditioned;
    }
    report.outputs["oracle"] = oracle;
    report.outputs["abs_difference"] = std::abs(value - oracle);
    report.error_estimates["oracle"] = error;
    text << "oracle = " << format_number(oracle) << " +/- " << format_number(error) << '\n'
         << "|closed - oracle| = " << format_number(std::abs(value - oracle)) << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t grid = 0;
};

int cmd_verify(const VerifyArgs& args, RunReport& report, std::ostream& text) {
  VerifyOptions options;
  options.suite = args.suite;
  options.seed = args.seed;
  if (args.samples > 0) options.samples = args.samples;
  if (args.grid > 0) options.grid = args.grid;
  report.inputs["suite"] = args.suite;
  if (options.samples) report.inputs["samples"] = *options.samples;
  if (options.grid) report.inputs["grid"] = *options.grid;

  const auto checks = run_verify(options);
  Json list = Json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    Json j{{"suite", c.suite},       {"name", c.name},         {"value", c.value},
           {"measured", c.measured}, {"tolerance", c.tolerance}, {"passed", c.passed}};
    if (c.error_bar) {
      j["error_bar"] = *c.error_bar;
      report.error_estimates[c.suite + "/" + c.name] = *c.error_bar;
    }
    list.push_back(std::move(j));
    if (!c.passed) ++failed;
    text << (c.passed ? "PASS " : "FAIL ") << c.suite << '/' << c.name << "  measured=" << brief(c.measured)
         << "  tolerance=" << brief(c.tolerance) << '\n';
  }
  report.outputs["checks"] = list;
  report.outputs["passed"] = checks.size() - failed;
  report.outputs["failed"] = failed;
  text << checks.size() - failed << '/' << checks.size() << " checks passed\n";
  return failed == 0 ? kSuccess : kFailure;
}

// ---------------------------------------------------------------- concentrate

struct ConcentrateArgs {
  int d = 2;
  double s = 1.0;
  double a = 1.0;
  double radius = 1.0;
};

int cmd_concentrate(const ConcentrateArgs& args, RunReport& report, std::ostream& text) {
  if (!(args.s > 0.0) || !(args.a > 0.0) || !(args.radius > 0.0)) {
    throw ValidationError("--s, --a and --radius must be positive");
  }
  const double fraction = functionals::mass_fraction(args.d, args.s, args.a, args.radius);
  const double check = functionals::mass_fraction_quadrature(args.d, args.s, args.a, args.radius);
  const bool vertex = fraction >= 0.5;
  report.inputs = {{"d", args.d}, {"s", args.s}, {"a", args.a}, {"radius", args.radius}};
  report.outputs["mass_fraction"] = fraction;
  report.outputs["regime"] = vertex ? "vertex" : "spatial-infinity";
  report.error_estimates["mass_fraction"] = std::abs(fraction - check);
  text << "mass_fraction = " << format_number(fraction) << '\n'
       << (vertex ? "regime: vertex (most of the L2 mass lies in the ball)\n"
                  : "regime: spatial-infinity (most of the L2 mass lies outside the ball)\n");
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical companion for sharp extension estimates on hyperboloids", "hyperex"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "hyperex 0.1.0");

  Output output;
  std::function<int(RunReport&, std::ostream&)> action;
  RunReport report;
  report.seed = default_seed();

  ConstantsArgs constants;
  auto* c = app.add_subcommand("constants", "Best constants and their symbolic forms");
  c->add_option("--d", constants.d, "Spatial dimension");
  c->add_option("--p", constants.p, "Lebesgue exponent");
  c->add_option("--s", constants.s, "Hyperboloid parameter")->capture_default_str();
  c->add_option("--sheet", constants.sheet, "one or two")->capture_default_str();
  c->add_flag("--csv", constants.csv, "Print CSV instead of a table");
  add_output_flags(c, output);
  c->callback([&] {
    constants.has_d = c->count("--d") > 0;
    constants.has_p = c->count("--p") > 0;
    action = [&](RunReport& r, std::ostream& t) { return cmd_constants(constants, r, t); };
  });

  CurveArgs curve;
  auto* cu = app.add_subcommand("curve", "Sweep Q_{d,p}(a, s) over a grid of a");
  cu->add_option("--d", curve.d)->capture_default_str();
  cu->add_option("--p", curve.p)->capture_default_str();
  cu->add_option("--s", curve.s)->capture_default_str();
  cu->add_option("--a-min", curve.a_min)->capture_default_str();
  cu->add_option("--a-max", curve.a_max)->capture_default_str();
  cu->add_option("--points", curve.points)->capture_default_str();
  cu->add_flag("--log-spacing", curve.log_spacing);
  cu->add_option("--method", curve.method, "auto, closed or quadrature")->capture_default_str();
  cu->add_option("--out", curve.out, "CSV destination (stdout when omitted)");
  add_output_flags(cu, output);
  cu->callback([&] {
    action = [&](RunReport& r, std::ostream& t) { return cmd_curve(curve, r, t, output.json); };
  });

  ConvArgs conv;
  auto* cv = app.add_subcommand("conv", "Pointwise n-fold convolution of the hyperboloid measure");
  cv->add_option("--d", conv.d)->capture_default_str();
  cv->add_option("--n", conv.n)->capture_default_str();
  cv->add_option("--s", conv.s)->capture_default_str();
  cv->add_option("--xi", conv.xi, "Spatial coordinates, comma separated")->required();
  cv->add_option("--tau", conv.tau, "Time coordinate")->required();
  cv->add_option("--method", conv.method, "closed or oracle")->capture_default_str();
  add_output_flags(cv, output);
  cv->callback([&] { action = [&](RunReport& r, std::ostream& t) { return cmd_conv(conv, r, t); }; });

  VerifyArgs verify;
  verify.seed = report.seed;
  auto* ve = app.add_subcommand("verify", "Run the verification suites");
  ve->add_option("--suite", verify.suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
  ve->add_option("--seed", verify.seed, "Seed (default: HYPEREX_SEED or 0)");
  ve->add_option("--samples", verify.samples, "Override per-check sample counts");
  ve->add_option("--grid", verify.grid, "Override grid sizes");
  add_output_flags(ve, output);
  ve->callback([&] {
    action = [&](RunReport& r, std::ostream& t) {
      r.seed = verify.seed;
      return cmd_verify(verify, r, t);
    };
  });

  ConcentrateArgs conc;
  auto* co = app.add_subcommand("concentrate", "Fraction of ||f_a||^2 inside a ball");
  co->add_option("--d", conc.d)->capture_default_str();
  co->add_option("--s", conc.s)->capture_default_str();
  co->add_option("--a", conc.a)->capture_default_str();
  co->add_option("--radius", conc.radius)->capture_default_str();
  add_output_flags(co, output);
  co->callback([&] { action = [&](RunReport& r, std::ostream& t) { return cmd_concentrate(conc, r, t); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  report.command = app.get_subcommands().front()->get_name();
  std::ostringstream text;
  int code = kSuccess;
  const auto start = std::chrono::steady_clock::now();
  try {
    code = action(report, text);
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  report.wall_time_ms =
      output.no_meta ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

  if (output.json) {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << text.str();
  }
  return code;
}

}  // namespace hyperex::cli
