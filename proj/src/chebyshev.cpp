#include "nodal/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nodal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDedupTol = 1e-12;

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v)
    if (out.empty() || x - out.back() > kDedupTol) out.push_back(x);
  v = std::move(out);
}

}  // namespace

ChebyshevValue u_eval_full(int n, double t) {
  if (n < 0) throw std::invalid_argument("u_eval: degree must be nonnegative");
  // (U, U', U'') for degrees k-1 and k
  double u0 = 1.0, d0 = 0.0, s0 = 0.0;
  if (n == 0) return {u0, d0, s0};
  double u1 = 2.0 * t, d1 = 2.0, s1 = 0.0;
  for (int k = 1; k < n; ++k) {
    const double u2 = 2.0 * t * u1 - u0;
    const double d2 = 2.0 * u1 + 2.0 * t * d1 - d0;
    const double s2 = 4.0 * d1 + 2.0 * t * s1 - s0;
    u0 = u1, d0 = d1, s0 = s1;
    u1 = u2, d1 = d2, s1 = s2;
  }
  return {u1, d1, s1};
}

double u_eval(int n, double t) { return u_eval_full(n, t).value; }

double ChebyshevCatalog::profile(double t) const { return u_eval(R - 1, std::cos(t)); }

double ChebyshevCatalog::profile_dt(double t) const {
  return -std::sin(t) * u_eval_full(R - 1, std::cos(t)).d1;
}

ChebyshevCatalog build_catalog(int R) {
  if (R < 2) throw std::invalid_argument("build_catalog: R must be >= 2");
  ChebyshevCatalog cat;
  cat.R = R;
  for (int i = 0; i <= R; ++i) cat.p.push_back(i * kPi / R);
  for (int i = 0; i < R; ++i) cat.mid.push_back((i + 0.5) * kPi / R);

  // U'_{R-1}(cos t) changes sign across each (p_j, p_{j+1}), 1 <= j <= R-2;
  // sin t > 0 there, so its zero is the extremum of U_{R-1}(cos t).
  const auto dprofile = [R](double t) { return u_eval_full(R - 1, std::cos(t)).d1; };
  for (int j = 1; j <= R - 2; ++j) {
    double lo = cat.p[j], hi = cat.p[j + 1];
    const double flo = dprofile(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = dprofile(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm > 0) == (flo > 0)) lo = mid;
      else hi = mid;
    }
    const double qj = 0.5 * (lo + hi);
    cat.q.push_back(qj);
    cat.M.push_back(u_eval(R - 1, std::cos(qj)));
  }

  // inf of U_{R-1} over [-1,1]: scan the endpoints and every extremum.
  double inf = static_cast<double>(R);  // U(1) = R
  cat.theta_minus_argmin = 0;
  cat.theta_minus_at_endpoint = true;
  const double at_minus_one = (R % 2 == 1) ? R : -R;  // U_{R-1}(-1) = (-1)^{R-1} R
  if (at_minus_one < inf) {
    inf = at_minus_one;
    cat.theta_minus_argmin = R - 1;
  }
  for (std::size_t j = 0; j < cat.M.size(); ++j) {
    if (cat.M[j] < inf) {
      inf = cat.M[j];
      cat.theta_minus_argmin = static_cast<int>(j) + 1;
      cat.theta_minus_at_endpoint = false;
    }
  }
  cat.theta_minus = std::atan(std::abs(inf) / R);
  return cat;
}

double resolve_theta(double a, double b) {
  if (a == 0.0 && b == 0.0) throw std::logic_error("resolve_theta: both coefficients vanish");
  // (cos th, sin th) is orthogonal to (a, b).
  double th = std::atan2(-a, b);
  if (th < 0.0) th += kPi;
  if (th >= kPi) th -= kPi;
  return th;
}

double theta_interior(const ChebyshevCatalog& cat, int i, int j) {
  return resolve_theta(cat.M.at(j - 1), cat.M.at(i - 1));
}

double theta_vertical_edge(const ChebyshevCatalog& cat, bool star_at_pi, int j) {
  const double ustar = star_at_pi ? ((cat.R % 2 == 1) ? cat.R : -cat.R) : cat.R;
  return resolve_theta(cat.M.at(j - 1), ustar);
}

double theta_horizontal_edge(const ChebyshevCatalog& cat, int i, bool star_at_pi) {
  const double ustar = star_at_pi ? ((cat.R % 2 == 1) ? cat.R : -cat.R) : cat.R;
  return resolve_theta(ustar, cat.M.at(i - 1));
}

std::vector<double> SpecialThetaCatalog::all() const {
  std::vector<double> v;
  v.insert(v.end(), T_o.begin(), T_o.end());
  v.insert(v.end(), T_x.begin(), T_x.end());
  v.insert(v.end(), T_y.begin(), T_y.end());
  sort_unique(v);
  return v;
}

SpecialThetaCatalog build_theta_catalog(const ChebyshevCatalog& cat) {
  SpecialThetaCatalog out;
  out.R = cat.R;
  const int n = static_cast<int>(cat.q.size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.T_o.push_back(theta_interior(cat, i, j));
  for (int j = 1; j <= n; ++j) {
    out.T_x.push_back(theta_vertical_edge(cat, false, j));
    out.T_x.push_back(theta_vertical_edge(cat, true, j));
    out.T_y.push_back(theta_horizontal_edge(cat, j, false));
    out.T_y.push_back(theta_horizontal_edge(cat, j, true));
  }
  sort_unique(out.T_o);
  sort_unique(out.T_x);
  sort_unique(out.T_y);
  return out;
}

SpecialThetaCatalog build_theta_catalog(int R) {
  if (R < 3) {
    SpecialThetaCatalog out;
    out.R = R;
    return out;
  }
  return build_theta_catalog(build_catalog(R));
}

}  // namespace nodal
