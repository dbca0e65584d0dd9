#include "nodal/verify.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "nodal/angle.hpp"
#include "nodal/chebyshev.hpp"
#include "nodal/critical_zeroes.hpp"
#include "nodal/nodal_topology.hpp"
#include "nodal/spectrum.hpp"

namespace nodal {

const std::vector<ReferenceCatalog>& reference_catalogs() {
  static const std::vector<ReferenceCatalog> refs = {
      {8,
       {0.179749, 0.309108, 0.436495, 0.563505, 0.690892, 0.820251},
       {0.161605, 0.185335, 0.223323, 0.25, 0.276677, 0.314665, 0.338395, 0.661605, 0.685335, 0.723323, 0.75,
        0.776677, 0.814665, 0.838395},
       {0.040363, 0.047665, 0.071705, 0.928295, 0.952335, 0.959636},
       {0.428295, 0.452335, 0.459636, 0.540363, 0.547665, 0.571705}},
      {9,
       {0.159593, 0.274419, 0.387439, 0.500000, 0.612561, 0.725581, 0.840407},
       {0.145132, 0.181901, 0.217145, 0.239975, 0.260025, 0.282855, 0.318099, 0.354868, 0.653215, 0.707395, 0.75,
        0.792605, 0.846785},
       {0.037494, 0.070922, 0.953949, 0.964777},
       {0.429078, 0.462505, 0.535223, 0.546050}},
  };
  return refs;
}

bool is_known_suite(const std::string& suite) {
  return suite == "catalog" || suite == "pleijel" || suite == "stern" || suite == "z" || suite == "all";
}

namespace {

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// Largest deviation in units of pi, or +inf on a size mismatch.
double compare(const std::vector<double>& got, const std::vector<double>& want_over_pi) {
  if (got.size() != want_over_pi.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t k = 0; k < got.size(); ++k) worst = std::max(worst, std::abs(got[k] / pi - want_over_pi[k]));
  return worst;
}

void catalog_suite(std::vector<CheckResult>& out) {
  for (const auto& ref : reference_catalogs()) {
    const auto cat = build_catalog(ref.R);
    const auto th = build_theta_catalog(cat);
    const auto add = [&](const char* name, const std::vector<double>& got, const std::vector<double>& want) {
      const double d = compare(got, want);
      out.push_back({"catalog R=" + std::to_string(ref.R) + " " + name, d <= 1e-5,
                     std::isfinite(d) ? fmt("max deviation %.2e pi", d)
                                      : "size " + std::to_string(got.size()) + " vs " + std::to_string(want.size())});
    };
    add("Q", cat.q, ref.q);
    add("T_o", th.T_o, ref.T_o);
    add("T_x", th.T_x, ref.T_x);
    add("T_y", th.T_y, ref.T_y);
  }
  bool even_ok = true;
  for (int R = 2; R <= 40; R += 2) even_ok = even_ok && build_catalog(R).theta_minus == pi / 4;
  out.push_back({"theta_minus = pi/4 for even R <= 40", even_ok, ""});
}

void pleijel_suite(std::vector<CheckResult>& out, int resolution) {
  const auto spectrum = enumerate_spectrum(73.0);
  out.push_back({"spectrum through 73 has 50 entries", spectrum.size() == 50 && spectrum.back().eigenvalue == 73,
                 std::to_string(spectrum.size()) + " entries"});
  const auto rep = pleijel_pipeline(resolution);
  const std::set<int> want_candidates{1, 2, 4, 5, 7, 9};
  std::string cand;
  for (int k : rep.candidates) cand += (cand.empty() ? "" : ",") + std::to_string(k);
  out.push_back({"candidates {1,2,4,5,7,9}", rep.candidates == want_candidates, "{" + cand + "}"});
  for (const auto& c : rep.cases)
    out.push_back({"k=" + std::to_string(c.k) + " mode (" + std::to_string(c.mode.m) + "," + std::to_string(c.mode.n) +
                       ") max domains",
                   true, std::to_string(c.max_count) + (c.courant_sharp ? " (Courant sharp)" : "")});
  std::string fin;
  for (int k : rep.courant_sharp) fin += (fin.empty() ? "" : ",") + std::to_string(k);
  out.push_back({"Courant-sharp set {1,2,4}", rep.courant_sharp == std::set<int>{1, 2, 4}, "{" + fin + "}"});
}

void stern_suite(std::vector<CheckResult>& out, int resolution) {
  for (int R : {2, 4, 6, 8, 10}) {
    const int res = resolution > 0 ? resolution : default_resolution(1, R);
    const double below = pi / 4 - 0.01;
    const ThetaFamily f1(1, R, below);
    const int d1 = count_nodal_domains(f1, res);
    const int ic1 = static_cast<int>(interior_critical_zeroes(R, below).size());
    const int ec1 = static_cast<int>(edge_critical_zeroes(R, below).size());
    out.push_back({"R=" + std::to_string(R) + " theta=pi/4-0.01", d1 == 2 && ic1 == 0 && ec1 == 2,
                   "domains " + std::to_string(d1) + ", interior " + std::to_string(ic1) + ", edge " +
                       std::to_string(ec1)});
    const ThetaFamily f2(1, R, pi / 4);
    const int d2 = count_nodal_domains(f2, res);
    const auto inner = interior_critical_zeroes(R, pi / 4);
    bool on_anti = true;
    for (const auto& z : inner) on_anti = on_anti && std::abs(z.x + z.y - pi) < 1e-10;
    out.push_back({"R=" + std::to_string(R) + " theta=pi/4",
                   d2 == R && static_cast<int>(inner.size()) == R - 2 && on_anti,
                   "domains " + std::to_string(d2) + ", interior " + std::to_string(inner.size())});
  }
}

void z_suite(std::vector<CheckResult>& out, int resolution) {
  for (int R = 4; R <= 12; ++R) {
    const auto rep = verify_z_structure(R, resolution);
    out.push_back({"Z structure R=" + std::to_string(R), rep.pass(),
                   "Z+ curves " + std::to_string(rep.plus.closed_curves) + "/" +
                       std::to_string(rep.plus.expected_closed_curves) + ", Z- curves " +
                       std::to_string(rep.minus.closed_curves) + "/" + std::to_string(rep.minus.expected_closed_curves)});
  }
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, int resolution) {
  if (!is_known_suite(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "catalog") catalog_suite(out);
  if (all || suite == "pleijel") pleijel_suite(out, resolution);
  if (all || suite == "stern") stern_suite(out, resolution);
  if (all || suite == "z") z_suite(out, resolution);
  return out;
}

}  // namespace nodal
