#include "nodal/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "nodal/angle.hpp"
#include "nodal/chebyshev.hpp"

namespace nodal {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void fill_signs(NodalGrid& g) {
  double vmax = 0.0;
  for (double v : g.values) vmax = std::max(vmax, std::abs(v));
  g.zero_tol = kSignTol * vmax;
  g.signs.resize(g.values.size());
  for (std::size_t k = 0; k < g.values.size(); ++k) {
    const double v = g.values[k];
    g.signs[k] = std::abs(v) <= g.zero_tol ? 0 : (v > 0 ? 1 : -1);
  }
}

}  // namespace

int default_resolution(int m, int n) {
  int factor = 64;
  if (const char* env = std::getenv("NODAL_GRID_FACTOR")) {
    try {
      factor = std::max(16, std::stoi(env));
    } catch (const std::exception&) {
      factor = 64;
    }
  }
  return factor * std::max(m, n);
}

int aligned_resolution(int m, int n, int resolution) {
  const int l = std::lcm(m, n);
  return ((resolution + l - 1) / l) * l;
}

NodalGrid sample_grid(const ThetaFamily& f, int resolution, bool refine) {
  if (f.is_trivial()) throw std::invalid_argument("eigenfunction vanishes identically");
  const int big = std::max(f.m(), f.n());
  if (resolution < 16 * big) throw std::invalid_argument("resolution must be at least 16 max(m,n)");

  NodalGrid g;
  g.m = f.m();
  g.n = f.n();
  g.theta = f.theta();
  g.resolution = aligned_resolution(f.m(), f.n(), resolution);
  const int N = g.resolution;
  std::vector<double> axis;
  axis.reserve(N + big + 2);
  for (int i = 0; i < N; ++i) axis.push_back((i + 0.5) * pi / N);
  if (refine && f.is_one_r()) {
    g.refined = true;
    axis.push_back(0.0);
    axis.push_back(pi);
    if (big >= 3) {
      const auto cat = build_catalog(big);
      axis.insert(axis.end(), cat.q.begin(), cat.q.end());
    }
    std::sort(axis.begin(), axis.end());
  }
  g.xs = axis;
  g.ys = axis;

  const int k1 = f.m() - 1, k2 = f.n() - 1;
  const std::size_t K = axis.size();
  std::vector<double> A(K), B(K);
  for (std::size_t i = 0; i < K; ++i) {
    const double t = std::cos(axis[i]);
    A[i] = u_eval(k1, t);
    B[i] = u_eval(k2, t);
  }
  const double c = f.cos_theta(), s = f.sin_theta();
  g.values.resize(K * K);
  for (std::size_t j = 0; j < K; ++j)
    for (std::size_t i = 0; i < K; ++i) g.values[j * K + i] = c * A[i] * B[j] + s * B[i] * A[j];
  fill_signs(g);
  return g;
}

NodalGrid sample_function(const std::function<double(double, double)>& fn, std::vector<double> xs,
                          std::vector<double> ys) {
  NodalGrid g;
  g.xs = std::move(xs);
  g.ys = std::move(ys);
  g.resolution = static_cast<int>(g.xs.size());
  g.values.resize(g.xs.size() * g.ys.size());
  for (std::size_t j = 0; j < g.ys.size(); ++j)
    for (std::size_t i = 0; i < g.xs.size(); ++i) g.values[j * g.xs.size() + i] = fn(g.xs[i], g.ys[j]);
  fill_signs(g);
  return g;
}

DomainLabels label_domains(const NodalGrid& grid) {
  const int nx = grid.nx(), ny = grid.ny();
  const auto idx = [nx](int i, int j) { return static_cast<std::size_t>(j) * nx + i; };
  UnionFind uf(grid.signs.size());
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int s = grid.sign(i, j);
      if (s == 0) continue;
      if (i + 1 < nx && grid.sign(i + 1, j) == s) uf.unite(idx(i, j), idx(i + 1, j));
      if (j + 1 < ny && grid.sign(i, j + 1) == s) uf.unite(idx(i, j), idx(i, j + 1));
    }
  DomainLabels out;
  out.label.assign(grid.signs.size(), -1);
  std::unordered_map<std::size_t, int> ids;
  for (std::size_t k = 0; k < grid.signs.size(); ++k) {
    if (grid.signs[k] == 0) continue;
    const auto root = uf.find(k);
    auto [it, inserted] = ids.emplace(root, out.count);
    if (inserted) ++out.count;
    out.label[k] = it->second;
  }
  return out;
}

int ContourSet::closed_count() const {
  return static_cast<int>(std::count(component_closed.begin(), component_closed.end(), true));
}

ContourSet extract_contours(const NodalGrid& grid, const std::function<double(double, double)>& center) {
  const int nx = grid.nx(), ny = grid.ny();
  const std::size_t H = static_cast<std::size_t>(nx - 1) * ny;
  const std::size_t nodes = H + static_cast<std::size_t>(nx) * (ny - 1);
  const auto hid = [nx](int i, int j) { return static_cast<std::size_t>(j) * (nx - 1) + i; };
  const auto vid = [nx, H](int i, int j) { return H + static_cast<std::size_t>(j) * nx + i; };
  const auto pos = [&grid](int i, int j) { return grid.value(i, j) > 0.0; };

  std::vector<Vec2> point(nodes);
  std::vector<int> degree(nodes, 0);
  UnionFind uf(nodes);
  ContourSet out;
  std::vector<std::pair<std::size_t, std::size_t>> links;

  const auto crossing = [](double x0, double y0, double v0, double x1, double y1, double v1) {
    const double t = v0 / (v0 - v1);
    return Vec2{x0 + t * (x1 - x0), y0 + t * (y1 - y0)};
  };
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i + 1 < nx; ++i)
      if (pos(i, j) != pos(i + 1, j))
        point[hid(i, j)] = crossing(grid.xs[i], grid.ys[j], grid.value(i, j), grid.xs[i + 1], grid.ys[j],
                                    grid.value(i + 1, j));
  for (int j = 0; j + 1 < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (pos(i, j) != pos(i, j + 1))
        point[vid(i, j)] = crossing(grid.xs[i], grid.ys[j], grid.value(i, j), grid.xs[i], grid.ys[j + 1],
                                    grid.value(i, j + 1));

  const auto link = [&](std::size_t a, std::size_t b) {
    links.emplace_back(a, b);
    ++degree[a];
    ++degree[b];
    uf.unite(a, b);
  };
  for (int j = 0; j + 1 < ny; ++j)
    for (int i = 0; i + 1 < nx; ++i) {
      const bool p00 = pos(i, j), p10 = pos(i + 1, j), p01 = pos(i, j + 1), p11 = pos(i + 1, j + 1);
      const std::size_t bottom = hid(i, j), top = hid(i, j + 1), left = vid(i, j), right = vid(i + 1, j);
      std::vector<std::size_t> cut;
      if (p00 != p10) cut.push_back(bottom);
      if (p10 != p11) cut.push_back(right);
      if (p11 != p01) cut.push_back(top);
      if (p01 != p00) cut.push_back(left);
      if (cut.size() == 2) {
        link(cut[0], cut[1]);
      } else if (cut.size() == 4) {
        double cv;
        if (center) {
          cv = center(0.5 * (grid.xs[i] + grid.xs[i + 1]), 0.5 * (grid.ys[j] + grid.ys[j + 1]));
        } else {
          cv = 0.25 * (grid.value(i, j) + grid.value(i + 1, j) + grid.value(i, j + 1) + grid.value(i + 1, j + 1));
        }
        if ((cv > 0.0) == p00) {
          // the 00-11 diagonal is connected: cut around corners 10 and 01
          link(bottom, right);
          link(top, left);
        } else {
          link(bottom, left);
          link(top, right);
        }
      }
    }

  std::unordered_map<std::size_t, int> ids;
  for (const auto& [a, b] : links) {
    const auto root = uf.find(a);
    auto [it, inserted] = ids.emplace(root, out.components);
    if (inserted) {
      ++out.components;
      out.component_closed.push_back(true);
      out.component_points.emplace_back();
    }
    out.segments.push_back({point[a], point[b]});
    out.segment_component.push_back(it->second);
  }
  std::vector<char> seen(nodes, 0);
  for (const auto& [a, b] : links)
    for (std::size_t v : {a, b}) {
      if (seen[v]) continue;
      seen[v] = 1;
      const int c = ids.at(uf.find(v));
      if (degree[v] != 2) out.component_closed[c] = false;
      out.component_points[c].push_back(point[v]);
    }
  return out;
}

}  // namespace nodal
