#include "nodal/eigenfunction.hpp"

#include <cmath>
#include <stdexcept>

#include "nodal/angle.hpp"
#include "nodal/chebyshev.hpp"

namespace nodal {

ThetaFamily::ThetaFamily(int m, int n, double theta)
    : m_(m), n_(n), theta_(canonical_theta(theta)), c_(std::cos(theta_)), s_(std::sin(theta_)) {
  if (m < 1 || n < 1) throw std::invalid_argument("mode indices must be >= 1");
}

double ThetaFamily::mu() const { return s_ / c_; }

ThetaFamily ThetaFamily::ordered() const {
  if (m_ <= n_) return *this;
  return ThetaFamily(n_, m_, pi / 2 - theta_);
}

bool ThetaFamily::is_trivial() const { return m_ == n_ && std::abs(c_ + s_) < 1e-14; }

namespace {

// Phi = S phi with S = sin x sin y and phi = a U(cos y) + b U(cos x).
struct OneRCoeffs {
  int R;
  double a;
  double b;
};

OneRCoeffs one_r_coeffs(const ThetaFamily& f) {
  if (f.m() == 1) return {f.n(), f.cos_theta(), f.sin_theta()};
  return {f.m(), f.sin_theta(), f.cos_theta()};
}

}  // namespace

double eval(const ThetaFamily& f, double x, double y) {
  const int m = f.m(), n = f.n();
  return f.cos_theta() * std::sin(m * x) * std::sin(n * y) +
         f.sin_theta() * std::sin(n * x) * std::sin(m * y);
}

Vec2 grad(const ThetaFamily& f, double x, double y) {
  if (f.is_one_r()) {
    const auto [R, a, b] = one_r_coeffs(f);
    const double sx = std::sin(x), cx = std::cos(x), sy = std::sin(y), cy = std::cos(y);
    const auto U = u_eval_full(R - 1, cx);
    const auto V = u_eval_full(R - 1, cy);
    const double phi = a * V.value + b * U.value;
    const double phi_x = -b * U.d1 * sx;
    const double phi_y = -a * V.d1 * sy;
    return {cx * sy * phi + sx * sy * phi_x, sx * cy * phi + sx * sy * phi_y};
  }
  const int m = f.m(), n = f.n();
  const double c = f.cos_theta(), s = f.sin_theta();
  return {c * m * std::cos(m * x) * std::sin(n * y) + s * n * std::cos(n * x) * std::sin(m * y),
          c * n * std::sin(m * x) * std::cos(n * y) + s * m * std::sin(n * x) * std::cos(m * y)};
}

Hessian hessian(const ThetaFamily& f, double x, double y) {
  if (f.is_one_r()) {
    const auto [R, a, b] = one_r_coeffs(f);
    const double sx = std::sin(x), cx = std::cos(x), sy = std::sin(y), cy = std::cos(y);
    const auto U = u_eval_full(R - 1, cx);
    const auto V = u_eval_full(R - 1, cy);
    const double phi = a * V.value + b * U.value;
    const double phi_x = -b * U.d1 * sx;
    const double phi_y = -a * V.d1 * sy;
    const double phi_xx = b * (U.d2 * sx * sx - U.d1 * cx);
    const double phi_yy = a * (V.d2 * sy * sy - V.d1 * cy);
    const double S = sx * sy, Sx = cx * sy, Sy = sx * cy, Sxy = cx * cy;
    return {-S * phi + 2 * Sx * phi_x + S * phi_xx,
            Sxy * phi + Sx * phi_y + Sy * phi_x,
            -S * phi + 2 * Sy * phi_y + S * phi_yy};
  }
  const int m = f.m(), n = f.n();
  const double c = f.cos_theta(), s = f.sin_theta();
  const double smx = std::sin(m * x), cmx = std::cos(m * x), snx = std::sin(n * x), cnx = std::cos(n * x);
  const double smy = std::sin(m * y), cmy = std::cos(m * y), sny = std::sin(n * y), cny = std::cos(n * y);
  return {-c * m * m * smx * sny - s * n * n * snx * smy,
          c * m * n * cmx * cny + s * n * m * cnx * cmy,
          -c * n * n * smx * sny - s * m * m * snx * smy};
}

double reduced_uv(const ThetaFamily& f, double u, double v) {
  const int m = f.m(), n = f.n();
  return f.cos_theta() * u_eval(m - 1, u) * u_eval(n - 1, v) +
         f.sin_theta() * u_eval(n - 1, u) * u_eval(m - 1, v);
}

double reduced(const ThetaFamily& f, double x, double y) { return reduced_uv(f, std::cos(x), std::cos(y)); }

SubstitutedForm SubstitutedForm::for_mode(int m, int n, double theta) {
  SubstitutedForm out;
  out.theta = canonical_theta(theta);
  if (m == 1 && n == 3) out.kind = SubstitutedCase::C13, out.R = 3;
  else if (m == 2 && n == 3) out.kind = SubstitutedCase::C23;
  else if (m == 1 && n == 4) out.kind = SubstitutedCase::C14, out.R = 4;
  else if (m == 1 && n >= 1) out.kind = SubstitutedCase::OneR, out.R = n;
  else throw std::invalid_argument("no substituted form for this mode");
  return out;
}

double eval_substituted(const SubstitutedForm& form, double u, double v) {
  const double c = std::cos(form.theta), s = std::sin(form.theta);
  switch (form.kind) {
    case SubstitutedCase::C13:
      return c * (4 * v * v - 1) + s * (4 * u * u - 1);
    case SubstitutedCase::C23:
      return c * u * (4 * v * v - 1) + s * v * (4 * u * u - 1);
    case SubstitutedCase::C14:
      return c * v * (2 * v * v - 1) + s * u * (2 * u * u - 1);
    case SubstitutedCase::OneR:
      if (form.R < 1) throw std::invalid_argument("R must be >= 1");
      return c * u_eval(form.R - 1, v) + s * u_eval(form.R - 1, u);
  }
  throw std::invalid_argument("unsupported substituted form");
}

Vec2 grad_substituted(const SubstitutedForm& form, double u, double v) {
  const double c = std::cos(form.theta), s = std::sin(form.theta);
  switch (form.kind) {
    case SubstitutedCase::C13:
      return {8 * s * u, 8 * c * v};
    case SubstitutedCase::C23:
      return {c * (4 * v * v - 1) + 8 * s * u * v, 8 * c * u * v + s * (4 * u * u - 1)};
    case SubstitutedCase::C14:
      return {s * (6 * u * u - 1), c * (6 * v * v - 1)};
    case SubstitutedCase::OneR:
      return {s * u_eval_full(form.R - 1, u).d1, c * u_eval_full(form.R - 1, v).d1};
  }
  throw std::invalid_argument("unsupported substituted form");
}

double substituted_prefactor(const SubstitutedForm& form, double x, double y) {
  const double S = std::sin(x) * std::sin(y);
  switch (form.kind) {
    case SubstitutedCase::C13:
    case SubstitutedCase::OneR:
      return S;
    case SubstitutedCase::C23:
      return 2 * S;
    case SubstitutedCase::C14:
      return 4 * S;
  }
  throw std::invalid_argument("unsupported substituted form");
}

ThetaFamily family_of(const SubstitutedForm& form) {
  switch (form.kind) {
    case SubstitutedCase::C13:
      return ThetaFamily(1, 3, form.theta);
    case SubstitutedCase::C23:
      return ThetaFamily(2, 3, form.theta);
    case SubstitutedCase::C14:
      return ThetaFamily(1, 4, form.theta);
    case SubstitutedCase::OneR:
      return ThetaFamily(1, form.R, form.theta);
  }
  throw std::invalid_argument("unsupported substituted form");
}

std::vector<Vec2> lattice_points(int R) {
  if (R < 1) throw std::invalid_argument("R must be >= 1");
  std::vector<Vec2> out;
  for (int i = 1; i < R; ++i)
    for (int j = 1; j < R; ++j) out.push_back({i * pi / R, j * pi / R});
  return out;
}

}  // namespace nodal
