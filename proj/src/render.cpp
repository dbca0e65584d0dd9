#include "nodal/render.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "nodal/angle.hpp"

namespace nodal {

using nlohmann::json;

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) { return std::stod(sig12(v)); }

json modes_json(const std::vector<Mode>& modes) {
  json arr = json::array();
  for (const auto& md : modes) arr.push_back({md.m, md.n});
  return arr;
}

std::string modes_text(const std::vector<Mode>& modes) {
  std::string out;
  for (const auto& md : modes) {
    if (!out.empty()) out += ";";
    out += "(" + std::to_string(md.m) + "," + std::to_string(md.n) + ")";
  }
  return out;
}

json angles_over_pi(const std::vector<double>& v) {
  json arr = json::array();
  for (double t : v) arr.push_back(theta_over_pi(t));
  return arr;
}

json zero_json(const CriticalZero& z) {
  return {{"x_over_pi", theta_over_pi(z.x)},
          {"y_over_pi", theta_over_pi(z.y)},
          {"locus", to_string(z.locus)},
          {"edge", to_string(z.edge)},
          {"order", z.order},
          {"degenerate", z.degenerate}};
}

}  // namespace

std::string spectrum_csv(const std::vector<SpectrumEntry>& entries) {
  std::string out = "k,lambda,mult,modes\n";
  for (const auto& e : entries)
    out += std::to_string(e.k) + "," + std::to_string(e.eigenvalue) + "," + std::to_string(e.multiplicity) + "," +
           modes_text(e.modes) + "\n";
  return out;
}

std::string spectrum_json(const std::vector<SpectrumEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries)
    arr.push_back({{"k", e.k}, {"eigenvalue", e.eigenvalue}, {"multiplicity", e.multiplicity}, {"modes", modes_json(e.modes)}});
  json doc = {{"schema_version", kSchemaVersion}, {"entries", arr}};
  return doc.dump(2) + "\n";
}

std::string spectrum_text(const std::vector<SpectrumEntry>& entries) {
  std::string out;
  char buf[128];
  for (const auto& e : entries) {
    std::snprintf(buf, sizeof buf, "%4d  %6lld  x%d  ", e.k, static_cast<long long>(e.eigenvalue), e.multiplicity);
    out += buf + modes_text(e.modes) + "\n";
  }
  return out;
}

std::string theta_catalog_json(const ChebyshevCatalog& cat, const SpecialThetaCatalog& th) {
  json M = json::array();
  for (double v : cat.M) M.push_back(round12(v));
  json doc = {{"schema_version", kSchemaVersion},
              {"R", cat.R},
              {"q_over_pi", angles_over_pi(cat.q)},
              {"M", M},
              {"T_o_over_pi", angles_over_pi(th.T_o)},
              {"T_x_over_pi", angles_over_pi(th.T_x)},
              {"T_y_over_pi", angles_over_pi(th.T_y)},
              {"theta_minus_over_pi", theta_over_pi(cat.theta_minus)},
              {"theta_minus_argmin", cat.theta_minus_at_endpoint
                                         ? (cat.theta_minus_argmin == 0 ? "t=1" : "t=-1")
                                         : "q_" + std::to_string(cat.theta_minus_argmin)}};
  return doc.dump(2) + "\n";
}

std::string theta_catalog_text(const ChebyshevCatalog& cat, const SpecialThetaCatalog& th) {
  std::ostringstream os;
  const auto line = [&os](const char* name, const std::vector<double>& v) {
    os << name << " / pi:";
    char buf[32];
    for (double t : v) {
      std::snprintf(buf, sizeof buf, " %.6f", t / pi);
      os << buf;
    }
    os << "\n";
  };
  os << "R = " << cat.R << "\n";
  line("Q  ", cat.q);
  line("T_o", th.T_o);
  line("T_x", th.T_x);
  line("T_y", th.T_y);
  char buf[64];
  std::snprintf(buf, sizeof buf, "theta_minus / pi: %.6f\n", cat.theta_minus / pi);
  os << buf;
  return os.str();
}

std::string critical_json(int m, int n, double theta, const std::vector<CriticalZero>& zeroes) {
  json arr = json::array();
  for (const auto& z : zeroes) arr.push_back(zero_json(z));
  json doc = {{"schema_version", kSchemaVersion},
              {"m", m},
              {"n", n},
              {"theta_over_pi", theta_over_pi(theta)},
              {"critical_zeroes", arr}};
  return doc.dump(2) + "\n";
}

std::string critical_text(const std::vector<CriticalZero>& zeroes) {
  std::string out;
  char buf[160];
  for (const auto& z : zeroes) {
    std::snprintf(buf, sizeof buf, "%-8s %-6s x/pi=%.9f y/pi=%.9f order=%d%s\n", to_string(z.locus).c_str(),
                  to_string(z.edge).c_str(), z.x / pi, z.y / pi, z.order, z.degenerate ? " degenerate" : "");
    out += buf;
  }
  return out;
}

std::string summary_json(const NodalSummary& s) {
  json zs = json::array();
  for (const auto& z : s.critical_zeroes) zs.push_back(zero_json(z));
  json pats = json::array();
  for (const auto& [sq, p] : s.q_patterns) pats.push_back({{"i", sq.first}, {"j", sq.second}, {"pattern", to_string(p)}});
  json doc = {{"schema_version", kSchemaVersion},
              {"m", s.m},
              {"n", s.n},
              {"theta_over_pi", theta_over_pi(s.theta)},
              {"resolution", s.resolution},
              {"domain_count", s.domain_count},
              {"courant_index", s.courant_index},
              {"courant_ok", s.courant_ok()},
              {"boundary_hits", s.boundary_hits.distinct},
              {"boundary_hits_with_multiplicity", s.boundary_hits.with_multiplicity},
              {"critical_zeroes", zs},
              {"q_patterns", pats}};
  if (s.closed_curve_count) doc["closed_curve_count"] = *s.closed_curve_count;
  return doc.dump(2) + "\n";
}

std::string summary_text(const NodalSummary& s) {
  std::ostringstream os;
  os << "mode (" << s.m << "," << s.n << ")  theta = " << format_theta(s.theta) << "\n";
  os << "nodal domains: " << s.domain_count << "  (courant index " << s.courant_index << ")\n";
  os << "critical zeroes: " << s.count(Locus::Vertex) << " vertex, " << s.count(Locus::Edge) << " edge, "
     << s.count(Locus::Interior) << " interior\n";
  os << "boundary hits: " << s.boundary_hits.distinct << "\n";
  return os.str();
}

std::string sweep_csv(const SweepReport& rep) {
  std::string out = "theta_over_pi,domain_count,n_interior_cz,n_edge_cz,anomaly_flag\n";
  for (const auto& s : rep.samples)
    out += sig12(theta_over_pi(s.theta)) + "," + std::to_string(s.domain_count) + "," + std::to_string(s.n_interior_cz) +
           "," + std::to_string(s.n_edge_cz) + "," + (s.anomaly ? "1" : "0") + "\n";
  return out;
}

std::string sweep_json(const SweepReport& rep) {
  json arr = json::array();
  for (const auto& s : rep.samples)
    arr.push_back({{"theta_over_pi", theta_over_pi(s.theta)},
                   {"breakpoint", s.is_breakpoint},
                   {"domain_count", s.domain_count},
                   {"n_interior_cz", s.n_interior_cz},
                   {"n_edge_cz", s.n_edge_cz},
                   {"anomaly", s.anomaly}});
  json doc = {{"schema_version", kSchemaVersion},
              {"m", rep.m},
              {"n", rep.n},
              {"breakpoints_over_pi", angles_over_pi(rep.breakpoints)},
              {"samples", arr},
              {"anomalies", rep.anomalies()}};
  return doc.dump(2) + "\n";
}

std::string render_nodal_svg(const NodalSummary& summary, const NodalGrid& grid, const RenderSpec& spec) {
  if (summary.m != grid.m || summary.n != grid.n || std::abs(summary.theta - grid.theta) > 1e-14)
    throw std::invalid_argument("render_nodal_svg: summary and grid describe different eigenfunctions");
  if (spec.width < 16 || spec.height < 16) throw std::invalid_argument("render_nodal_svg: image too small");

  const double pad = 30.0;
  const double W = spec.width - 2 * pad, H = spec.height - 2 * pad;
  const auto px = [&](double x) { return pad + x / pi * W; };
  const auto py = [&](double y) { return spec.math_axes ? pad + (1.0 - y / pi) * H : pad + y / pi * H; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
     << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height << "\" fill=\"white\"/>\n";

  const bool one_r = grid.m == 1 || grid.n == 1;
  const int R = std::max(grid.m, grid.n);
  if (spec.show_checkerboard && one_r && R >= 2) {
    const double th = grid.m == 1 ? grid.theta : canonical_theta(pi / 2 - grid.theta);
    auto mask = make_checkerboard(R, th);
    os << "<g fill=\"#d9d9d9\" stroke=\"none\">\n";
    for (int i = 0; i < R; ++i)
      for (int j = 0; j < R; ++j) {
        if (mask.is_white(i, j) || mask.polarity == 0) continue;
        const double x0 = px(i * pi / R), x1 = px((i + 1) * pi / R);
        const double y0 = py(j * pi / R), y1 = py((j + 1) * pi / R);
        os << "<rect x=\"" << fixed6(std::min(x0, x1)) << "\" y=\"" << fixed6(std::min(y0, y1)) << "\" width=\""
           << fixed6(std::abs(x1 - x0)) << "\" height=\"" << fixed6(std::abs(y1 - y0)) << "\"/>\n";
      }
    os << "</g>\n";
  }

  os << "<rect x=\"" << fixed6(pad) << "\" y=\"" << fixed6(pad) << "\" width=\"" << fixed6(W) << "\" height=\""
     << fixed6(H) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

  const auto contours = extract_contours(grid);
  os << "<path fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" d=\"";
  for (const auto& seg : contours.segments)
    os << "M" << fixed6(px(seg.a[0])) << " " << fixed6(py(seg.a[1])) << "L" << fixed6(px(seg.b[0])) << " "
       << fixed6(py(seg.b[1]));
  os << "\"/>\n";

  if (spec.show_lattice && one_r && R >= 2) {
    os << "<g fill=\"black\">\n";
    for (const auto& p : lattice_points(R))
      os << "<circle cx=\"" << fixed6(px(p[0])) << "\" cy=\"" << fixed6(py(p[1])) << "\" r=\"1.5\"/>\n";
    os << "</g>\n";
  }
  if (spec.show_critical_zeroes) {
    os << "<g stroke=\"none\">\n";
    for (const auto& z : summary.critical_zeroes) {
      if (z.locus == Locus::Vertex && !z.degenerate) continue;
      os << "<circle cx=\"" << fixed6(px(z.x)) << "\" cy=\"" << fixed6(py(z.y)) << "\" r=\"3.5\" fill=\""
         << (z.degenerate ? "#c0392b" : "#e67e22") << "\"/>\n";
    }
    os << "</g>\n";
  }

  const std::string label = spec.theta_label.empty() ? format_theta(grid.theta) : spec.theta_label;
  os << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  os << "<text x=\"" << fixed6(pad) << "\" y=\"" << fixed6(pad - 10) << "\">(" << grid.m << "," << grid.n
     << ")  theta = " << label << "  domains = " << summary.domain_count << "</text>\n";
  const double ylab = spec.math_axes ? spec.height - pad + 16 : pad - 10;
  os << "<text x=\"" << fixed6(spec.width - pad - 40) << "\" y=\"" << fixed6(ylab) << "\">x &#8594;</text>\n";
  os << "<text x=\"" << fixed6(4) << "\" y=\"" << fixed6(spec.math_axes ? pad + 12 : spec.height - pad) << "\">y "
     << (spec.math_axes ? "&#8593;" : "&#8595;") << "</text>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename onto " + target.string() + ": " + ec.message());
  }
}

}  // namespace nodal
