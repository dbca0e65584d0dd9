#pragma once

#include <functional>
#include <vector>

#include "nodal/eigenfunction.hpp"

namespace nodal {

// Signs of the reduced function Phi / (sin x sin y) on a tensor grid.
//
// The base grid is the offset grid (i + 1/2) pi / N. For the (1,R) family
// the reduced function is a sum f(x) + g(y) of functions that are monotone
// between the extremum angles q_j; those lines and the edges x,y in {0,pi}
// are then added to the grid, which makes the 4-connectivity of same-sign
// samples coincide with the connectivity of the nodal domains.
struct NodalGrid {
  int m = 1;
  int n = 1;
  double theta = 0.0;
  int resolution = 0;  // N of the offset grid
  bool refined = false;
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> values;  // row major, values[j * nx() + i] at (xs[i], ys[j])
  std::vector<signed char> signs;
  double zero_tol = 0.0;

  int nx() const { return static_cast<int>(xs.size()); }
  int ny() const { return static_cast<int>(ys.size()); }
  int sign(int i, int j) const { return signs[static_cast<std::size_t>(j) * xs.size() + i]; }
  double value(int i, int j) const { return values[static_cast<std::size_t>(j) * xs.size() + i]; }
};

inline constexpr double kSignTol = 1e-12;

// 64 max(m,n); NODAL_GRID_FACTOR replaces the 64 when set (at least 16).
int default_resolution(int m, int n);

// Smallest multiple of lcm(m, n) that is >= resolution.
int aligned_resolution(int m, int n, int resolution);

NodalGrid sample_grid(const ThetaFamily& f, int resolution, bool refine = true);

// Sample an arbitrary function on the given coordinates.
NodalGrid sample_function(const std::function<double(double, double)>& fn, std::vector<double> xs,
                          std::vector<double> ys);

struct DomainLabels {
  std::vector<int> label;  // -1 on zero samples
  int count = 0;
};

// 4-connected components of equal nonzero sign.
DomainLabels label_domains(const NodalGrid& grid);

struct Segment {
  Vec2 a;
  Vec2 b;
};

// Marching-squares extraction of the zero level. Saddle cells are resolved
// by the sign at the cell centre, from `center` when given and from the
// mean of the corners otherwise.
struct ContourSet {
  std::vector<Segment> segments;
  std::vector<int> segment_component;
  std::vector<bool> component_closed;
  std::vector<std::vector<Vec2>> component_points;
  int components = 0;

  int closed_count() const;
};

ContourSet extract_contours(const NodalGrid& grid,
                            const std::function<double(double, double)>& center = nullptr);

}  // namespace nodal
