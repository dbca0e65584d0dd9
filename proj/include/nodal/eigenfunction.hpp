#pragma once

#include <array>
#include <vector>

namespace nodal {

// Phi(x,y) = cos(theta) sin(m x) sin(n y) + sin(theta) sin(n x) sin(m y)
// on [0,pi]^2, with theta kept in [0, pi).
class ThetaFamily {
 public:
  ThetaFamily(int m, int n, double theta);

  int m() const { return m_; }
  int n() const { return n_; }
  double theta() const { return theta_; }
  double cos_theta() const { return c_; }
  double sin_theta() const { return s_; }

  // Stern's parametrisation phi_mu = psi + mu phi, mu = tan(theta).
  double mu() const;

  // One of m, n equals 1: Phi = sin x sin y (a U(cos y) + b U(cos x)).
  bool is_one_r() const { return m_ == 1 || n_ == 1; }
  int big_index() const { return m_ > n_ ? m_ : n_; }

  // Same nodal set with m <= n: (n, m, theta) is (m, n, pi/2 - theta) up to sign.
  ThetaFamily ordered() const;

  // Identically zero (m == n and cos + sin vanishes).
  bool is_trivial() const;

 private:
  int m_;
  int n_;
  double theta_;
  double c_;
  double s_;
};

using Vec2 = std::array<double, 2>;

struct Hessian {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;
  double trace() const { return xx + yy; }
};

double eval(const ThetaFamily& f, double x, double y);
Vec2 grad(const ThetaFamily& f, double x, double y);
Hessian hessian(const ThetaFamily& f, double x, double y);

// Phi / (sin x sin y) written in u = cos x, v = cos y:
// cos(theta) U_{m-1}(u) U_{n-1}(v) + sin(theta) U_{n-1}(u) U_{m-1}(v).
// Well defined and continuous on the closed square.
double reduced(const ThetaFamily& f, double x, double y);
double reduced_uv(const ThetaFamily& f, double u, double v);

enum class SubstitutedCase { C13, C23, C14, OneR };

// Polynomial forms Psi(u, v) with Phi(x,y) = prefactor(x,y) Psi(cos x, cos y).
struct SubstitutedForm {
  SubstitutedCase kind = SubstitutedCase::OneR;
  double theta = 0.0;
  int R = 3;  // only for OneR

  static SubstitutedForm for_mode(int m, int n, double theta);
};

double eval_substituted(const SubstitutedForm& form, double u, double v);
Vec2 grad_substituted(const SubstitutedForm& form, double u, double v);
double substituted_prefactor(const SubstitutedForm& form, double x, double y);
ThetaFamily family_of(const SubstitutedForm& form);

// Lattice points (i pi / R, j pi / R), 1 <= i, j <= R-1.
std::vector<Vec2> lattice_points(int R);

}  // namespace nodal
