#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nodal/angle.hpp"
#include "nodal/chebyshev.hpp"
#include "nodal/critical_zeroes.hpp"
#include "nodal/eigenfunction.hpp"
#include "nodal/grid.hpp"
#include "nodal/spectrum.hpp"

namespace nodal {

// ---- domain counting ----
// resolution 0 picks default_resolution(m, n) throughout.

int count_nodal_domains(const ThetaFamily& f, int resolution);
int count_nodal_domains(int m, int n, double theta, int resolution);

// ---- checkerboard ----

using Square = std::pair<int, int>;

// Q_{i,j} = (i pi/R, (i+1) pi/R) x (j pi/R, (j+1) pi/R), 0 <= i,j < R.
// White squares are where the nodal set may enter; on grey squares cos(theta)
// X and sin(theta) Y have the same strict sign.
struct CheckerboardMask {
  int R = 1;
  int polarity = 1;  // sign of cos(theta); 0 when it vanishes
  std::set<Square> white_squares;

  bool is_white(int i, int j) const { return white_squares.count({i, j}) > 0; }
};

CheckerboardMask make_checkerboard(int R, double theta);

// Adjacent sample pairs of opposite sign (or zero samples) lying strictly
// inside one grey cell of the line arrangement {k pi/m} x {k pi/n}.
long checkerboard_violations(const ThetaFamily& f, int resolution);
long checkerboard_violations(int R, double theta, int resolution);

// ---- Q-square patterns ----

enum class PatternKind { InnerA, InnerB, InnerC, BoundaryA, BoundaryB, BoundaryC, BoundaryD };
std::string to_string(PatternKind p);

struct QPattern {
  int i = 0;
  int j = 0;
  PatternKind pattern = PatternKind::InnerA;
};

// InnerA: the horizontal segment through (q_i, q_j) meets the nodal set,
// InnerB: the vertical one does, InnerC: (q_i, q_j) is a critical zero.
// Boundary squares are classified by the edge critical zeroes on their
// boundary part: D none, A one, B one of order three, C two.
QPattern classify_q_pattern(int R, double theta, int i, int j);
QPattern classify_q_pattern(const ChebyshevCatalog& cat, const std::vector<CriticalZero>& boundary, double theta,
                            int i, int j);

std::map<Square, PatternKind> q_pattern_map(int R, double theta);

// ---- summaries ----

struct NodalSummary {
  int m = 1;
  int n = 1;
  double theta = 0.0;
  int resolution = 0;
  int domain_count = 0;
  std::vector<CriticalZero> critical_zeroes;
  BoundaryHits boundary_hits;
  std::map<Square, PatternKind> q_patterns;
  std::optional<int> closed_curve_count;
  int courant_index = 1;  // smallest k with lambda_k = m^2 + n^2

  bool courant_ok() const { return domain_count <= courant_index; }
  int count(Locus l) const;
};

NodalSummary summarize(const ThetaFamily& f, int resolution = 0);

// ---- Z+ / Z- ----

struct ZCurveReport {
  bool plus = true;
  bool contains_diagonal = false;       // x = y
  bool contains_anti_diagonal = false;  // x + y = pi
  int closed_curves = 0;                // from contour extraction of the quotient
  int closed_curves_from_domains = 0;   // domains of the quotient minus one
  int expected_closed_curves = 0;
  int expected_domain_count = 0;
  bool expected_diagonal = false;
  bool expected_anti_diagonal = false;
  NodalSummary summary;

  bool pass() const;
};

struct ZStructureReport {
  int R = 2;
  ZCurveReport plus;
  ZCurveReport minus;
  // R even: (-1)^j Z+(x, m_j) > 0 on (p_{j+1}, pi - p_{j+1}) for 1 <= j <= r-1.
  std::optional<bool> median_sign_claim;

  bool pass() const;
};

ZStructureReport verify_z_structure(int R, int resolution = 0);

// ---- desingularization ----

enum class Opening { Horizontal, Vertical, Undetermined };
std::string to_string(Opening o);

struct DesingularizationReport {
  int R = 2;
  double theta = 0.0;
  double critical_theta = 0.0;  // pi/4 for R even, 3pi/4 for R odd
  std::vector<std::pair<Square, Opening>> squares;
  bool all_agree = false;
  Opening direction = Opening::Undetermined;
};

// Horizontal: the horizontal segment through the former crossing is free of
// the nodal set, so the cross has opened left to right.
DesingularizationReport desingularization_check(int R, double theta);

// ---- sweep ----

struct SweepOptions {
  double lo = 0.0;
  double hi = pi;
  int samples_per_interval = 1;
  int resolution = 0;
  // Explicit breakpoints replace the catalog; explicit thetas replace both.
  std::vector<double> breakpoints;
  std::vector<double> thetas;
  bool parallel = true;
};

struct SweepSample {
  double theta = 0.0;
  bool is_breakpoint = false;
  int interval = -1;  // index of the open interval, -1 on breakpoints
  int domain_count = 0;
  int n_interior_cz = 0;
  int n_edge_cz = 0;
  int n_degenerate = 0;
  bool anomaly = false;
};

struct SweepReport {
  int m = 1;
  int n = 1;
  std::vector<double> breakpoints;
  std::vector<SweepSample> samples;

  int anomalies() const;
  std::set<int> counts() const;
  int max_count() const;
};

SweepReport sweep(int m, int n, const SweepOptions& options = {});

// ---- Courant-sharp pipeline ----

struct PleijelCase {
  int k = 1;
  std::int64_t eigenvalue = 2;
  Mode mode;
  int max_count = 0;
  std::set<int> counts;
  bool courant_sharp = false;
};

struct PleijelReport {
  std::set<int> candidates;
  std::vector<PleijelCase> cases;
  std::set<int> courant_sharp;
};

PleijelReport pleijel_pipeline(int resolution = 0);

}  // namespace nodal
