#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "splitplane/contour.hpp"
#include "splitplane/expr.hpp"
#include "splitplane/io.hpp"
#include "splitplane/text.hpp"

namespace splitplane::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> numbers(const std::string& csv, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("malformed number '" + item + "' in " + what);
    }
  }
  return out;
}

Interval interval(const std::string& text, const std::string& what) {
  const std::vector<double> v = numbers(text, what);
  if (v.size() != 2) throw UsageError(what + " expects lo,hi");
  return {v[0], v[1]};
}

SignFactor sign_factor(const std::string& s) {
  if (s == "1") return SignFactor::One;
  if (s == "j") return SignFactor::J;
  if (s == "-1") return SignFactor::MinusOne;
  if (s == "-j") return SignFactor::MinusJ;
  throw UsageError("sector must be one of 1, j, -1, -j");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + path);
  f << text;
}

// Options shared by the verbs; each verb reads the subset it registers.
struct Options {
  std::string expr = "h";
  std::string at = "0";
  bool with_derivative = false;
  std::string contour;
  std::string rule = "midpoint";
  int panels = 0;
  std::string h0 = "0";
  double psi_max = 5.0;
  double r_inner = 1e-8;
  double r_outer = 0.0;  // 0: exp(-psi_max)
  int variant = 1;
  double alpha = -1.0;
  std::string shape = "crossing";
  std::string arc;
  std::string kind = "cartesian";
  std::string t_range = "-1,1";
  std::string x_range = "-1,1";
  int n_t = 11;
  int n_x = 11;
  int samples = 200;
  std::string sector = "1";
  bool residuals = false;
  double step = 0.0;  // 0: default stencil
  std::string format = "json";
  std::string output;
  double R = 1.0;
  double phi0 = 1.0;
  std::string times = "1,2,3,4";
  std::string wave_x_range = "-0.99,0.99";
  int n = 201;
  int boundary_samples = 1000;
  double tol = 1e-6;
};

RegularizationParams regularization(const Options& o) {
  RegularizationParams r{o.psi_max, o.r_inner, {}};
  if (o.r_outer > 0.0) r.r_outer = o.r_outer;
  return r;
}

nlohmann::json reg_json(const RegularizationParams& r) {
  return {{"psi_max", r.psi_max}, {"r_inner", r.r_inner}, {"r_outer", r.outer()}, {"ell_h", r.ell_h()}};
}

std::string with_metadata(const std::string& verb, const nlohmann::json& params, nlohmann::json body) {
  body["metadata"] = metadata(verb, params);
  return dump_fixed(body);
}

int quad_panels(const Options& o, int fallback) { return o.panels > 0 ? o.panels : default_panels(fallback); }

std::string cmd_eval(const Options& o) {
  const FunctionExpr f = parse_expression(o.expr);
  const DoubleNumber h = parse_double_number(o.at);
  nlohmann::json body{{"value", to_json(f(h))}};
  if (o.with_derivative) body["derivative"] = to_json(f.null_derivative(h));
  return with_metadata("eval", {{"expr", f.to_string()}, {"at", to_json(h)}, {"derivative", o.with_derivative}},
                       std::move(body));
}

std::string cmd_grid(const Options& o) {
  const FunctionExpr f = parse_expression(o.expr);
  nlohmann::json params{{"expr", f.to_string()}, {"kind", o.kind},   {"t_range", o.t_range},
                        {"x_range", o.x_range},  {"n_t", o.n_t},     {"n_x", o.n_x},
                        {"format", o.format},    {"residuals", o.residuals}};
  if (o.residuals) {
    const Interval t = interval(o.t_range, "--t-range"), x = interval(o.x_range, "--x-range");
    const DoubleNumber centre(0.5 * (t.lo + t.hi), 0.5 * (x.lo + x.hi));
    const StencilSpec s = o.step > 0.0 ? StencilSpec{o.step, 2} : default_stencil(centre);
    params["step"] = s.step;
    const auto samples = residual_grid(f, t.lo, t.hi, x.lo, x.hi, o.n_t, o.n_x, s);
    if (o.format == "csv") return residuals_csv(samples, metadata("grid", params));
    if (o.format != "json") throw UsageError("residual grids are exported as csv or json");
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : samples) rows.push_back({r.t, r.x, r.r1, r.r2});
    return with_metadata("grid", params, {{"columns", {"t", "x", "r1", "r2"}}, {"residuals", rows}});
  }
  GridSpec g;
  g.t_range = interval(o.t_range, "--t-range");
  g.x_range = interval(o.x_range, "--x-range");
  g.n_t = o.n_t;
  g.n_x = o.n_x;
  g.samples_per_line = o.samples;
  if (o.kind == "polar") {
    g.kind = GridSpec::Kind::Polar;
    g.sign = sign_factor(o.sector);
    params["sector"] = o.sector;
  } else if (o.kind != "cartesian") {
    throw UsageError("--kind must be cartesian or polar");
  }
  params["samples"] = o.samples;
  const auto lines = map_grid(f, g);
  const nlohmann::json meta = metadata("grid", params);
  if (o.format == "csv") return polylines_csv(lines, meta);
  if (o.format == "svg") return polylines_svg(lines, meta);
  if (o.format != "json") throw UsageError("--format must be json, csv or svg");
  return dump_fixed({{"metadata", meta}, {"polylines", to_json(lines)}});
}

nlohmann::json integral_json(const IntegralResult& r) {
  return {{"value", to_json(r.value)}, {"panels", r.panels}, {"est_error", r.est_error}};
}

std::string cmd_integrate(const Options& o) {
  const FunctionExpr f = parse_expression(o.expr);
  const int panels = quad_panels(o, 1024);
  const Contour c = parse_contour(o.contour, panels);
  QuadratureRule rule = QuadratureRule::Midpoint;
  if (o.rule == "gauss4") {
    rule = QuadratureRule::GaussLegendre4;
  } else if (o.rule != "midpoint") {
    throw UsageError("--rule must be midpoint or gauss4");
  }
  const IntegralResult r = contour_integral(f, c, rule);
  return with_metadata("integrate",
                       {{"expr", f.to_string()}, {"contour", o.contour}, {"rule", o.rule}, {"panels", panels}},
                       integral_json(r));
}

std::string cmd_cauchy(const Options& o) {
  const FunctionExpr f = parse_expression(o.expr);
  const DoubleNumber h0 = parse_double_number(o.h0);
  const RegularizationParams reg = regularization(o);
  const int panels = quad_panels(o, 2048);
  const DoubleNumber v = cauchy_value(f, h0, reg, o.variant, panels);
  return with_metadata("cauchy",
                       {{"expr", f.to_string()},
                        {"h0", to_json(h0)},
                        {"regularization", reg_json(reg)},
                        {"variant", o.variant},
                        {"panels", panels}},
                       {{"value", to_json(v)}});
}

std::string cmd_residue(const Options& o) {
  const DoubleNumber h0 = parse_double_number(o.h0);
  const RegularizationParams reg = regularization(o);
  ResidueShape shape = ResidueShape::Crossing;
  if (o.shape == "closed_sector") {
    shape = ResidueShape::ClosedSector;
  } else if (o.shape != "crossing") {
    throw UsageError("--shape must be crossing or closed_sector");
  }
  const int panels = quad_panels(o, 2048);
  const DoubleNumber v = power_residue(o.alpha, h0, reg, shape, panels);
  return with_metadata("residue",
                       {{"alpha", o.alpha},
                        {"h0", to_json(h0)},
                        {"regularization", reg_json(reg)},
                        {"shape", o.shape},
                        {"panels", panels}},
                       {{"value", to_json(v)}});
}

std::string cmd_length(const Options& o) {
  const int panels = quad_panels(o, 1024);
  double length = 0.0;
  if (!o.arc.empty()) {
    if (o.contour.rfind("circle:", 0) != 0) throw UsageError("--arc needs a circle contour");
    const std::vector<double> c = numbers(o.contour.substr(7), "circle spec");
    if (c.size() != 3) throw UsageError("circle spec expects ct,cx,r");
    const std::size_t cut = o.arc.find("-to-", 1);
    if (cut == std::string::npos) throw UsageError("--arc expects A-to-B");
    const DoubleNumber centre(c[0], c[1]);
    const DoubleNumber a = parse_double_number(o.arc.substr(0, cut)) - centre;
    const DoubleNumber b = parse_double_number(o.arc.substr(cut + 4)) - centre;
    const double th0 = std::atan2(a.x(), a.t());
    double th1 = std::atan2(b.x(), b.t());
    if (th1 <= th0) th1 += 2.0 * std::numbers::pi;  // counter-clockwise from A to B
    length = curve_length(euclidean_arc(centre, c[2], th0, th1, panels));
  } else {
    length = curve_length(parse_contour(o.contour, panels));
  }
  return with_metadata("length", {{"contour", o.contour}, {"arc", o.arc}}, {{"length", length}});
}

std::string cmd_area(const Options& o) {
  const int panels = quad_panels(o, 1024);
  const double a = region_area(parse_contour(o.contour, panels));
  return with_metadata("area", {{"contour", o.contour}, {"panels", panels}}, {{"area", a}});
}

std::string cmd_wave(const Options& o) {
  const WaveSolution sol = log_circle_solution(o.R, o.phi0);
  const Interval xr = interval(o.wave_x_range, "--x-range");
  const std::vector<double> times = numbers(o.times, "--t");
  const nlohmann::json params{{"R", o.R}, {"phi0", o.phi0}, {"t", times}, {"x_range", o.wave_x_range}, {"n", o.n},
                              {"format", o.format}};
  if (o.format == "csv") {
    std::string body = "# metadata " + dump_fixed(metadata("wave", params), -1) + "t,x,phi\n";
    for (double t : times) {
      const std::string block = slice_csv(t, time_slice(sol, t, xr, o.n), nlohmann::json::object());
      body += block.substr(block.find("t,x,phi\n") + 8);
    }
    return body;
  }
  if (o.format != "json") throw UsageError("--format must be json or csv");
  nlohmann::json slices = nlohmann::json::array();
  for (double t : times) {
    nlohmann::json pts = nlohmann::json::array();
    for (const SlicePoint& p : time_slice(sol, t, xr, o.n)) {
      pts.push_back({p.x, p.phi ? nlohmann::json(*p.phi) : nlohmann::json(nullptr)});
    }
    slices.push_back({{"t", t}, {"points", pts}});
  }
  return with_metadata("wave", params, {{"slices", slices}});
}

std::string cmd_verify(const Options& o) {
  WaveSolution sol = log_circle_solution(o.R, o.phi0);
  if (o.expr != "h") sol = {parse_expression(o.expr), o.phi0, false, "user expression"};
  const StencilSpec s{o.step > 0.0 ? o.step : 1e-3, 2};
  const VerifyReport r = verify_solution(sol, hyperbolic_circle_samples(o.R, o.boundary_samples), o.tol, s);
  return with_metadata("verify",
                       {{"expr", sol.F.to_string()},
                        {"R", o.R},
                        {"phi0", o.phi0},
                        {"boundary_samples", o.boundary_samples},
                        {"tol", o.tol},
                        {"step", s.step}},
                       to_json(r));
}

}  // namespace

int default_panels(int fallback) {
  if (const char* env = std::getenv("SPLITPLANE_PANELS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 100000000) return static_cast<int>(v);
  }
  return fallback;
}

Contour parse_contour(const std::string& spec, int panels) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("contour spec needs kind:numbers");
  const std::string kind = spec.substr(0, colon);
  const std::vector<double> v = numbers(spec.substr(colon + 1), "contour spec");
  if (kind == "circle") {
    if (v.size() != 3) throw UsageError("circle spec expects ct,cx,r");
    return euclidean_circle(DoubleNumber(v[0], v[1]), v[2], panels);
  }
  if (kind == "segment") {
    if (v.size() != 4) throw UsageError("segment spec expects t0,x0,t1,x1");
    return {{segment(DoubleNumber(v[0], v[1]), DoubleNumber(v[2], v[3]), panels)}, false};
  }
  if (kind == "gamma1") {
    if (v.size() != 5) throw UsageError("gamma1 spec expects h0_t,h0_x,psi_max,r_inner,r_outer");
    const DoubleNumber h0(v[0], v[1]);
    const RegularizationParams reg{v[2], v[3], v[4]};
    reg.validate();
    return {{hyperbolic_ray(h0, SignFactor::One, -reg.psi_max, reg.r_inner, reg.outer(), panels),
             hyperbolic_arc(h0, SignFactor::One, reg.outer(), -reg.psi_max, reg.psi_max, panels),
             hyperbolic_ray(h0, SignFactor::One, reg.psi_max, reg.outer(), reg.r_inner, panels)},
            false};
  }
  if (kind == "polygon") {
    if (v.size() < 6 || v.size() % 2 != 0) throw UsageError("polygon spec expects at least three t,x pairs");
    std::vector<DoubleNumber> vertices;
    for (std::size_t i = 0; i < v.size(); i += 2) vertices.emplace_back(v[i], v[i + 1]);
    return polygon(vertices, panels);
  }
  throw UsageError("unknown contour kind '" + kind + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analysis over double (split-complex) numbers", "splitplane"};
  app.require_subcommand(1, 1);
  Options o;

  auto expr = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--expr", o.expr, "expression in h");
    if (required) opt->required();
  };
  auto reg = [&](CLI::App* c) {
    c->add_option("--h0", o.h0, "base point")->required();
    c->add_option("--psi-max", o.psi_max, "hyperbolic angle cutoff")->capture_default_str();
    c->add_option("--r-inner", o.r_inner, "inner radius")->capture_default_str();
    c->add_option("--r-outer", o.r_outer, "outer radius (default exp(-psi-max))");
    c->add_option("--panels", o.panels, "quadrature panels per piece");
  };
  auto output = [&](CLI::App* c) { c->add_option("-o,--output", o.output, "output file (default stdout)"); };

  CLI::App* eval = app.add_subcommand("eval", "evaluate an expression");
  expr(eval, true);
  eval->add_option("--at", o.at, "point h")->required();
  eval->add_flag("--derivative", o.with_derivative, "also report dF/dh");
  output(eval);

  CLI::App* grid = app.add_subcommand("grid", "map a coordinate grid");
  expr(grid, true);
  grid->add_option("--kind", o.kind)->capture_default_str();
  grid->add_option("--t-range", o.t_range, "t (or rho) range lo,hi")->capture_default_str();
  grid->add_option("--x-range", o.x_range, "x (or psi) range lo,hi")->capture_default_str();
  grid->add_option("--n-t", o.n_t)->capture_default_str();
  grid->add_option("--n-x", o.n_x)->capture_default_str();
  grid->add_option("--samples", o.samples, "samples per line")->capture_default_str();
  grid->add_option("--sector", o.sector, "polar grid sign factor 1|j|-1|-j")->capture_default_str();
  grid->add_flag("--residuals", o.residuals, "export Cauchy-Riemann residuals instead");
  grid->add_option("--step", o.step, "stencil step for --residuals");
  grid->add_option("--format", o.format, "json|csv|svg")->capture_default_str();
  output(grid);

  CLI::App* integrate = app.add_subcommand("integrate", "contour integral of F dh");
  expr(integrate, true);
  integrate->add_option("--contour", o.contour, "contour spec")->required();
  integrate->add_option("--rule", o.rule, "midpoint|gauss4")->capture_default_str();
  integrate->add_option("--panels", o.panels, "panels per segment");
  output(integrate);

  CLI::App* cauchy = app.add_subcommand("cauchy", "regularised Cauchy value of F at h0");
  expr(cauchy, true);
  reg(cauchy);
  cauchy->add_option("--variant", o.variant, "sector 1..4")->capture_default_str();
  output(cauchy);

  CLI::App* residue = app.add_subcommand("residue", "integral of (h-h0)^alpha dh");
  residue->add_option("--alpha", o.alpha)->required();
  reg(residue);
  residue->add_option("--shape", o.shape, "crossing|closed_sector")->capture_default_str();
  output(residue);

  CLI::App* length = app.add_subcommand("length", "pseudo-Euclidean curve length");
  length->add_option("--contour", o.contour, "contour spec")->required();
  length->add_option("--arc", o.arc, "A-to-B: counter-clockwise arc of a circle contour");
  length->add_option("--panels", o.panels);
  output(length);

  CLI::App* area = app.add_subcommand("area", "area enclosed by a closed contour");
  area->add_option("--contour", o.contour, "contour spec")->required();
  area->add_option("--panels", o.panels);
  output(area);

  CLI::App* wave = app.add_subcommand("wave", "time slices of the log-circle wave solution");
  wave->add_option("--R", o.R)->capture_default_str();
  wave->add_option("--phi0", o.phi0)->capture_default_str();
  wave->add_option("--t", o.times, "comma-separated times")->capture_default_str();
  wave->add_option("--x-range", o.wave_x_range)->capture_default_str();
  wave->add_option("--n", o.n, "samples per slice")->capture_default_str();
  wave->add_option("--format", o.format, "json|csv")->capture_default_str();
  output(wave);

  CLI::App* verify = app.add_subcommand("verify", "check a wave solution against its boundary data");
  expr(verify, false);
  verify->add_option("--R", o.R)->capture_default_str();
  verify->add_option("--phi0", o.phi0)->capture_default_str();
  verify->add_option("--samples", o.boundary_samples, "boundary samples")->capture_default_str();
  verify->add_option("--tol", o.tol)->capture_default_str();
  verify->add_option("--step", o.step, "stencil step (default 1e-3)");
  output(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string text;
    if (eval->parsed()) text = cmd_eval(o);
    if (grid->parsed()) text = cmd_grid(o);
    if (integrate->parsed()) text = cmd_integrate(o);
    if (cauchy->parsed()) text = cmd_cauchy(o);
    if (residue->parsed()) text = cmd_residue(o);
    if (length->parsed()) text = cmd_length(o);
    if (area->parsed()) text = cmd_area(o);
    if (wave->parsed()) text = cmd_wave(o);
    if (verify->parsed()) text = cmd_verify(o);
    emit(text, o.output, out);
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.kind() == ErrorKind::Syntax || e.kind() == ErrorKind::UnknownFunction ? 2 : 1;
  }
}

}  // namespace splitplane::cli
