#pragma once

#include <vector>

namespace nodal {

// Second-kind Chebyshev polynomial U_n and its first two derivatives at t,
// via the three-term recurrence U_{k+1} = 2t U_k - U_{k-1}.
struct ChebyshevValue {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

ChebyshevValue u_eval_full(int n, double t);
double u_eval(int n, double t);

// Extremum data of t -> U_{R-1}(cos t) on (0, pi).
//
// q[j-1] holds q_j (1 <= j <= R-2), the unique zero of d/dt U_{R-1}(cos t)
// inside (p_j, p_{j+1}); M[j-1] = U_{R-1}(cos q_j). p[i] = i pi / R for
// 0 <= i <= R and mid[i] = (i + 1/2) pi / R for 0 <= i <= R-1.
struct ChebyshevCatalog {
  int R = 2;
  std::vector<double> q;
  std::vector<double> M;
  std::vector<double> p;
  std::vector<double> mid;
  double theta_minus = 0.0;
  // Where inf U_{R-1} over [-1,1] was attained: index j of q_j, or 0 / R-1
  // meaning the endpoint t = 1 / t = -1.
  int theta_minus_argmin = 0;
  bool theta_minus_at_endpoint = false;

  // U_{R-1}(cos t) and derivatives with respect to the angle t.
  double profile(double t) const;
  double profile_dt(double t) const;
};

ChebyshevCatalog build_catalog(int R);

// Angle theta in [0, pi) solving a cos(theta) + b sin(theta) = 0.
double resolve_theta(double a, double b);

struct SpecialTheta {
  double theta = 0.0;
  // Defining indices; 0 encodes the endpoint * = 0 and R-1 encodes * = pi
  // for the starred slot (see kind).
  int i = 0;
  int j = 0;
};

// Special parameter values at which critical zeroes appear.
//   T_o: theta(q_i, q_j)    cos th U(cos q_j) + sin th U(cos q_i) = 0
//   T_x: theta(*, q_j)      cos th U(cos q_j) + sin th U(cos *)   = 0
//   T_y: theta(q_i, *)      cos th U(cos *)   + sin th U(cos q_i) = 0
// with * in {0, pi}. Each set is sorted and deduplicated to 1e-12.
struct SpecialThetaCatalog {
  int R = 3;
  std::vector<double> T_o;
  std::vector<double> T_x;
  std::vector<double> T_y;

  // Sorted union T_o u T_x u T_y.
  std::vector<double> all() const;
};

// theta(q_i, q_j) for 1-based indices into cat.q.
double theta_interior(const ChebyshevCatalog& cat, int i, int j);
// theta(*, q_j); star_at_pi selects * = pi.
double theta_vertical_edge(const ChebyshevCatalog& cat, bool star_at_pi, int j);
// theta(q_i, *)
double theta_horizontal_edge(const ChebyshevCatalog& cat, int i, bool star_at_pi);

SpecialThetaCatalog build_theta_catalog(int R);
SpecialThetaCatalog build_theta_catalog(const ChebyshevCatalog& cat);

}  // namespace nodal
