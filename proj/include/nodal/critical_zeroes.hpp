#pragma once

#include <string>
#include <vector>

#include "nodal/chebyshev.hpp"
#include "nodal/eigenfunction.hpp"

namespace nodal {

enum class Locus { Vertex, Edge, Interior };
enum class Edge { None, Left, Right, Bottom, Top };  // x=0, x=pi, y=0, y=pi

struct CriticalZero {
  double x = 0.0;
  double y = 0.0;
  Locus locus = Locus::Interior;
  Edge edge = Edge::None;
  int order = 2;
  bool degenerate = false;
  double theta = 0.0;
};

std::string to_string(Locus l);
std::string to_string(Edge e);

// Relative tolerance (times R) under which a vertex / edge value counts as zero.
inline constexpr double kDegenerateTol = 1e-10;
inline constexpr double kInteriorThetaTol = 1e-9;

// The four corners of the square for Phi^theta_{1,R}.
std::vector<CriticalZero> vertex_classification(int R, double theta);

// Critical zeroes on the four open edges for Phi^theta_{1,R}.
std::vector<CriticalZero> edge_critical_zeroes(int R, double theta);
std::vector<CriticalZero> edge_critical_zeroes(const ChebyshevCatalog& cat, double theta);

// Points (q_i, q_j) with theta within tol of theta(q_i, q_j).
std::vector<CriticalZero> interior_critical_zeroes(int R, double theta, double tol = kInteriorThetaTol);
std::vector<CriticalZero> interior_critical_zeroes(const ChebyshevCatalog& cat, double theta,
                                                   double tol = kInteriorThetaTol);

// Interior critical zeroes for the modes (1,3), (2,3), (1,4).
std::vector<CriticalZero> case3_critical_zeroes(int m, int n, double theta);

// Grid-seeded Newton search on grad Phi = 0 over the open square, for any
// (m,n). Best effort; used as a cross-check.
std::vector<CriticalZero> find_interior_critical_zeroes_numeric(const ThetaFamily& f, int seeds_per_axis = 0);

// Vertices and edge zeroes for any (m,n), from the normal derivative along
// each edge.
std::vector<CriticalZero> boundary_critical_zeroes(const ThetaFamily& f);

// Full inventory: vertices, edges, interior. Analytic where available.
std::vector<CriticalZero> critical_inventory(const ThetaFamily& f);

// Number of nodal arcs through an interior point, from sign changes of Phi on
// a small circle around it.
int local_order(const ThetaFamily& f, double x, double y, double radius);

struct BoundaryHits {
  int distinct = 0;         // points of the boundary met by the interior nodal set
  int with_multiplicity = 0;  // order-3 edge points count twice
};

BoundaryHits boundary_hits(const ThetaFamily& f);

}  // namespace nodal
