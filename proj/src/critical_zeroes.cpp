#include "nodal/critical_zeroes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "nodal/angle.hpp"

namespace nodal {

std::string to_string(Locus l) {
  switch (l) {
    case Locus::Vertex: return "vertex";
    case Locus::Edge: return "edge";
    case Locus::Interior: return "interior";
  }
  return "?";
}

std::string to_string(Edge e) {
  switch (e) {
    case Edge::None: return "none";
    case Edge::Left: return "left";
    case Edge::Right: return "right";
    case Edge::Bottom: return "bottom";
    case Edge::Top: return "top";
  }
  return "?";
}

namespace {

double sign_pow(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

double bisect(const std::function<double(double)>& g, double lo, double hi, double glo) {
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm > 0) == (glo > 0)) lo = mid, glo = gm;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

CriticalZero on_edge(Edge e, double t, int order, double theta) {
  CriticalZero z;
  z.locus = Locus::Edge;
  z.edge = e;
  z.order = order;
  z.degenerate = order > 2;
  z.theta = theta;
  switch (e) {
    case Edge::Left: z.x = 0.0, z.y = t; break;
    case Edge::Right: z.x = pi, z.y = t; break;
    case Edge::Bottom: z.x = t, z.y = 0.0; break;
    case Edge::Top: z.x = t, z.y = pi; break;
    case Edge::None: break;
  }
  return z;
}

// Zeroes on (0, pi) of g, which is strictly monotone between consecutive
// entries of `extrema`. Values with |g| <= zero_tol at an extremum are
// double roots (order 3 on the edge); at 0 and pi they are vertices and
// ignored here.
void monotone_edge_roots(const std::function<double(double)>& g, const std::vector<double>& extrema,
                         double zero_tol, Edge e, double theta, std::vector<CriticalZero>& out) {
  std::vector<double> t{0.0};
  t.insert(t.end(), extrema.begin(), extrema.end());
  t.push_back(pi);
  std::vector<double> G(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    G[k] = g(t[k]);
    if (std::abs(G[k]) <= zero_tol) G[k] = 0.0;
  }
  for (std::size_t k = 1; k + 1 < t.size(); ++k)
    if (G[k] == 0.0) out.push_back(on_edge(e, t[k], 3, theta));
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    if (G[k] == 0.0 || G[k + 1] == 0.0) continue;
    if ((G[k] > 0) == (G[k + 1] > 0)) continue;
    out.push_back(on_edge(e, bisect(g, t[k], t[k + 1], G[k]), 2, theta));
  }
}

void sort_zeroes(std::vector<CriticalZero>& v) {
  std::sort(v.begin(), v.end(), [](const CriticalZero& a, const CriticalZero& b) {
    if (a.locus != b.locus) return a.locus < b.locus;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
}

CriticalZero vertex(double x, double y, bool degenerate, double theta) {
  CriticalZero z;
  z.x = x, z.y = y;
  z.locus = Locus::Vertex;
  z.order = degenerate ? 4 : 2;
  z.degenerate = degenerate;
  z.theta = theta;
  return z;
}

}  // namespace

std::vector<CriticalZero> vertex_classification(int R, double theta) {
  if (R < 1) throw std::invalid_argument("vertex_classification: R must be >= 1");
  theta = canonical_theta(theta);
  const double c = std::cos(theta), s = std::sin(theta);
  // U_{R-1}(cos 0) = R, U_{R-1}(cos pi) = (-1)^{R-1} R
  const auto U = [R](double t) { return t == 0.0 ? R : sign_pow(R - 1) * R; };
  std::vector<CriticalZero> out;
  for (double a : {0.0, pi})
    for (double b : {0.0, pi}) {
      const double phi = c * U(b) + s * U(a);
      out.push_back(vertex(a, b, std::abs(phi) <= kDegenerateTol * R, theta));
    }
  return out;
}

std::vector<CriticalZero> edge_critical_zeroes(const ChebyshevCatalog& cat, double theta) {
  theta = canonical_theta(theta);
  const int R = cat.R;
  const double c = std::cos(theta), s = std::sin(theta);
  const double Rpi = sign_pow(R - 1) * R;
  std::vector<CriticalZero> out;
  const double tol = kDegenerateTol * R;
  const auto edge = [&](double a, double b, Edge e) {
    const auto g = [&cat, a, b](double t) { return a * cat.profile(t) + b; };
    monotone_edge_roots(g, cat.q, tol, e, theta, out);
  };
  edge(c, R * s, Edge::Left);
  edge(c, Rpi * s, Edge::Right);
  edge(s, R * c, Edge::Bottom);
  edge(s, Rpi * c, Edge::Top);
  sort_zeroes(out);
  return out;
}

std::vector<CriticalZero> edge_critical_zeroes(int R, double theta) {
  if (R < 1) throw std::invalid_argument("edge_critical_zeroes: R must be >= 1");
  if (R == 1) return {};
  return edge_critical_zeroes(build_catalog(R), theta);
}

std::vector<CriticalZero> interior_critical_zeroes(const ChebyshevCatalog& cat, double theta, double tol) {
  theta = canonical_theta(theta);
  std::vector<CriticalZero> out;
  const int n = static_cast<int>(cat.q.size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (dist_mod_pi(theta, theta_interior(cat, i, j)) >= tol) continue;
      CriticalZero z;
      z.x = cat.q[i - 1];
      z.y = cat.q[j - 1];
      z.locus = Locus::Interior;
      z.theta = theta;
      out.push_back(z);
    }
  return out;
}

std::vector<CriticalZero> interior_critical_zeroes(int R, double theta, double tol) {
  if (R < 3) return {};
  return interior_critical_zeroes(build_catalog(R), theta, tol);
}

std::vector<CriticalZero> case3_critical_zeroes(int m, int n, double theta) {
  theta = canonical_theta(theta);
  const auto near = [theta](double t) { return dist_mod_pi(theta, t) < kInteriorThetaTol; };
  std::vector<CriticalZero> out;
  const auto add = [&](double x, double y) {
    CriticalZero z;
    z.x = x, z.y = y;
    z.theta = theta;
    out.push_back(z);
  };
  if (m == 1 && n == 3) {
    if (near(3 * pi / 4)) add(pi / 2, pi / 2);
  } else if (m == 2 && n == 3) {
    // Away from the product cases the nodal set carries no interior critical
    // point; the products have their line crossings.
    if (near(0.0)) add(pi / 2, pi / 3), add(pi / 2, 2 * pi / 3);
    else if (near(pi / 2)) add(pi / 3, pi / 2), add(2 * pi / 3, pi / 2);
  } else if (m == 1 && n == 4) {
    const double w = 1.0 / std::sqrt(6.0);
    // Psi(su w, sv w) is proportional to cos(theta) sv + sin(theta) su
    int same = 0;
    if (near(pi / 4)) same = -1;
    else if (near(3 * pi / 4)) same = 1;
    if (same != 0)
      for (int su : {-1, 1}) add(std::acos(su * w), std::acos(same * su * w));
  } else {
    throw std::invalid_argument("case3_critical_zeroes: supported modes are (1,3), (2,3), (1,4)");
  }
  sort_zeroes(out);
  return out;
}

int local_order(const ThetaFamily& f, double x, double y, double radius) {
  constexpr int K = 256;
  int changes = 0;
  double first = 0.0, prev = 0.0;
  for (int k = 0; k < K; ++k) {
    const double a = 2 * pi * (k + 0.5) / K;
    const double v = eval(f, x + radius * std::cos(a), y + radius * std::sin(a));
    if (v == 0.0) continue;
    if (first == 0.0) first = v;
    else if ((v > 0) != (prev > 0)) ++changes;
    prev = v;
  }
  if (first != 0.0 && (first > 0) != (prev > 0)) ++changes;
  return changes / 2;
}

std::vector<CriticalZero> find_interior_critical_zeroes_numeric(const ThetaFamily& f, int seeds_per_axis) {
  const int big = std::max(f.m(), f.n());
  const int G = seeds_per_axis > 0 ? seeds_per_axis : 12 * big;
  const double h = pi / G;
  std::vector<CriticalZero> out;
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      double x = (i + 0.5) * h, y = (j + 0.5) * h;
      bool ok = false;
      for (int it = 0; it < 80; ++it) {
        const auto g = grad(f, x, y);
        const auto H = hessian(f, x, y);
        const double det = H.xx * H.yy - H.xy * H.xy;
        double dx, dy;
        if (std::abs(det) > 1e-300) {
          dx = -(H.yy * g[0] - H.xy * g[1]) / det;
          dy = -(-H.xy * g[0] + H.xx * g[1]) / det;
        } else {
          break;
        }
        const double len = std::hypot(dx, dy);
        if (len > h) dx *= h / len, dy *= h / len;
        x += dx, y += dy;
        if (!(x > 0 && x < pi && y > 0 && y < pi)) break;
        if (len < 1e-15) {
          ok = true;
          break;
        }
      }
      if (!(x > 1e-9 && x < pi - 1e-9 && y > 1e-9 && y < pi - 1e-9)) continue;
      const auto g = grad(f, x, y);
      if (std::abs(eval(f, x, y)) >= 1e-10 || std::hypot(g[0], g[1]) >= 1e-8) continue;
      (void)ok;
      const bool dup = std::any_of(out.begin(), out.end(), [&](const CriticalZero& z) {
        return std::hypot(z.x - x, z.y - y) < 1e-7;
      });
      if (dup) continue;
      CriticalZero z;
      z.x = x, z.y = y;
      z.theta = f.theta();
      z.order = std::max(2, local_order(f, x, y, 1e-3 * h));
      z.degenerate = z.order > 2;
      out.push_back(z);
    }
  sort_zeroes(out);
  return out;
}

std::vector<CriticalZero> boundary_critical_zeroes(const ThetaFamily& f) {
  const ThetaFamily g = f.ordered();
  std::vector<CriticalZero> out;
  if (g.m() == 1) {
    const int R = g.n();
    out = vertex_classification(R, g.theta());
    if (R >= 2) {
      auto e = edge_critical_zeroes(R, g.theta());
      out.insert(out.end(), e.begin(), e.end());
    }
    for (auto& z : out) z.theta = f.theta();
    sort_zeroes(out);
    return out;
  }

  const int m = f.m(), n = f.n();
  const double c = f.cos_theta(), s = f.sin_theta();
  const double mn = static_cast<double>(m) * n;
  // mixed derivative at each vertex, up to the factor m n
  const auto vx = [&](double a, double b) {
    const int ia = a == 0.0 ? 0 : 1, ib = b == 0.0 ? 0 : 1;
    return c * sign_pow(m * ia + n * ib) + s * sign_pow(n * ia + m * ib);
  };
  for (double a : {0.0, pi})
    for (double b : {0.0, pi}) out.push_back(vertex(a, b, std::abs(vx(a, b)) <= kDegenerateTol, f.theta()));

  // Normal derivative along an edge divided by sin t:
  // alpha U_{k1}(cos t) + beta U_{k2}(cos t).
  const int big = std::max(m, n);
  const double scale = (std::abs(c) + std::abs(s)) * mn * big;
  const auto edge = [&](double alpha, int k1, double beta, int k2, Edge e) {
    const auto P = [=](double t) { return alpha * u_eval(k1, std::cos(t)) + beta * u_eval(k2, std::cos(t)); };
    const auto D = [=](double t) {
      return alpha * u_eval_full(k1, std::cos(t)).d1 + beta * u_eval_full(k2, std::cos(t)).d1;
    };
    const int K = 400 * big;
    std::vector<double> extrema;
    double prev = D(pi / K);
    for (int i = 2; i < K; ++i) {
      const double t = i * pi / K;
      const double d = D(t);
      if (d == 0.0) continue;
      if (prev != 0.0 && (d > 0) != (prev > 0)) extrema.push_back(bisect(D, (i - 1) * pi / K, t, prev));
      prev = d;
    }
    monotone_edge_roots(P, extrema, kDegenerateTol * scale, e, f.theta(), out);
  };
  edge(c * m, n - 1, s * n, m - 1, Edge::Left);
  edge(c * m * sign_pow(m), n - 1, s * n * sign_pow(n), m - 1, Edge::Right);
  edge(c * n, m - 1, s * m, n - 1, Edge::Bottom);
  edge(c * n * sign_pow(n), m - 1, s * m * sign_pow(m), n - 1, Edge::Top);
  sort_zeroes(out);
  return out;
}

std::vector<CriticalZero> critical_inventory(const ThetaFamily& f) {
  if (f.is_trivial()) throw std::invalid_argument("critical_inventory: eigenfunction vanishes identically");
  auto out = boundary_critical_zeroes(f);
  const ThetaFamily g = f.ordered();
  std::vector<CriticalZero> inner;
  if (g.m() == 1) {
    inner = interior_critical_zeroes(g.n(), g.theta());
  } else if (g.m() == 2 && g.n() == 3) {
    inner = case3_critical_zeroes(2, 3, g.theta());
  } else {
    inner = find_interior_critical_zeroes_numeric(f);
  }
  for (auto& z : inner) z.theta = f.theta();
  out.insert(out.end(), inner.begin(), inner.end());
  sort_zeroes(out);
  return out;
}

BoundaryHits boundary_hits(const ThetaFamily& f) {
  BoundaryHits h;
  for (const auto& z : boundary_critical_zeroes(f)) {
    if (z.locus == Locus::Edge) {
      h.distinct += 1;
      h.with_multiplicity += z.order - 1;
    } else if (z.locus == Locus::Vertex && z.degenerate) {
      h.distinct += 1;
      h.with_multiplicity += 1;
    }
  }
  return h;
}

}  // namespace nodal
