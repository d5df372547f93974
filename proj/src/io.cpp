#include "splitplane/io.hpp"

#include <algorithm>
#include <limits>

#include "splitplane/text.hpp"

namespace splitplane {

nlohmann::json metadata(const std::string& command, const nlohmann::json& parameters) {
  return {{"version", kVersion}, {"command", command}, {"parameters", parameters}};
}

namespace {

void dump_into(const nlohmann::json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // nlohmann objects iterate in key order
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += nlohmann::json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short arrays of scalars stay on one line.
      const bool flat = j.size() <= 4 && std::all_of(j.begin(), j.end(), [](const auto& e) { return e.is_primitive(); });
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += flat ? ", " : ",";
        if (!flat) newline(depth + 1);
        dump_into(j[i], indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_fixed17(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_fixed(const nlohmann::json& j, int indent) {
  std::string out;
  dump_into(j, indent, 0, out);
  out += '\n';
  return out;
}

nlohmann::json to_json(const DoubleNumber& h) { return {{"t", h.t()}, {"x", h.x()}}; }

nlohmann::json to_json(const std::vector<Polyline>& lines) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Polyline& p : lines) {
    nlohmann::json pts = nlohmann::json::array();
    for (const DoubleNumber& h : p.points) pts.push_back({h.t(), h.x()});
    arr.push_back({{"line", p.source_line}, {"breaks", p.breaks}, {"points", std::move(pts)}});
  }
  return arr;
}

nlohmann::json to_json(const VerifyReport& r) {
  return {{"boundary_max_dev", r.boundary_max_dev},
          {"interior_max_box_residual", r.interior_max_box_residual},
          {"interior_points", r.interior_points},
          {"pass", r.pass}};
}

namespace {

std::string csv_header(const nlohmann::json& meta) { return "# metadata " + dump_fixed(meta, -1); }

}  // namespace

std::string polylines_csv(const std::vector<Polyline>& lines, const nlohmann::json& meta) {
  std::string out = csv_header(meta) + "line_id,k,t,x\n";
  for (const Polyline& p : lines) {
    for (std::size_t k = 0; k < p.points.size(); ++k) {
      out += std::to_string(p.source_line) + ',' + std::to_string(k) + ',' + format_fixed17(p.points[k].t()) + ',' +
             format_fixed17(p.points[k].x()) + '\n';
    }
  }
  return out;
}

std::string residuals_csv(const std::vector<ResidualSample>& samples, const nlohmann::json& meta) {
  std::string out = csv_header(meta) + "t,x,r1,r2\n";
  for (const ResidualSample& s : samples) {
    out += format_fixed17(s.t) + ',' + format_fixed17(s.x) + ',' + format_fixed17(s.r1) + ',' + format_fixed17(s.r2) +
           '\n';
  }
  return out;
}

std::string slice_csv(double t, const std::vector<SlicePoint>& slice, const nlohmann::json& meta) {
  std::string out = csv_header(meta) + "t,x,phi\n";
  for (const SlicePoint& p : slice) {
    out += format_fixed17(t) + ',' + format_fixed17(p.x) + ',' + (p.phi ? format_fixed17(*p.phi) : "") + '\n';
  }
  return out;
}

std::string polylines_svg(const std::vector<Polyline>& lines, const nlohmann::json& meta) {
  double lo_t = std::numeric_limits<double>::infinity(), hi_t = -lo_t, lo_x = lo_t, hi_x = -lo_t;
  for (const Polyline& p : lines) {
    for (const DoubleNumber& h : p.points) {
      lo_t = std::min(lo_t, h.t());
      hi_t = std::max(hi_t, h.t());
      lo_x = std::min(lo_x, h.x());
      hi_x = std::max(hi_x, h.x());
    }
  }
  if (!std::isfinite(lo_t)) lo_t = lo_x = -1.0, hi_t = hi_x = 1.0;
  const double pad = 0.05 * std::max({hi_t - lo_t, hi_x - lo_x, 1e-9});
  lo_t -= pad, hi_t += pad, lo_x -= pad, hi_x += pad;
  const double w = hi_t - lo_t, hgt = hi_x - lo_x;
  const double stroke = 0.002 * std::max(w, hgt);
  const auto num = [](double v) { return format_fixed17(v); };
  // SVG y grows downwards, so the x coordinate is negated.
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(lo_t) + ' ' + num(-hi_x) + ' ' +
                    num(w) + ' ' + num(hgt) + "\">\n";
  std::string comment = dump_fixed(meta, -1);
  for (std::size_t pos = 0; (pos = comment.find("--", pos)) != std::string::npos;) comment.replace(pos, 2, "- -");
  comment.pop_back();
  out += "<!-- metadata " + comment + " -->\n";
  const double reach = std::max({std::abs(lo_t), std::abs(hi_t), std::abs(lo_x), std::abs(hi_x)});
  for (int sgn : {1, -1}) {
    out += "<line x1=\"" + num(-reach) + "\" y1=\"" + num(sgn * reach) + "\" x2=\"" + num(reach) + "\" y2=\"" +
           num(-sgn * reach) + "\" stroke=\"gray\" stroke-dasharray=\"" + num(4 * stroke) + "\" stroke-width=\"" +
           num(stroke) + "\"/>\n";
  }
  for (const Polyline& p : lines) {
    if (p.points.empty()) continue;
    std::string d;
    std::size_t next_break = 0;
    for (std::size_t k = 0; k < p.points.size(); ++k) {
      const bool starts_run = k == 0 || (next_break < p.breaks.size() && p.breaks[next_break] == k);
      if (starts_run && k != 0) ++next_break;
      d += (starts_run ? (k == 0 ? "M" : " M") : " L") + num(p.points[k].t()) + ',' + num(-p.points[k].x());
    }
    out += "<path data-line=\"" + std::to_string(p.source_line) + "\" d=\"" + d +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + num(stroke) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace splitplane
