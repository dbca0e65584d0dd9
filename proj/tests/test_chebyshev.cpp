#include <cmath>
#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "nodal/chebyshev.hpp"

using namespace nodal;
constexpr double PI = std::numbers::pi;

TEST_CASE("recurrence values") {
  CHECK(u_eval(0, 0.3) == 1.0);
  CHECK(u_eval(1, 0.3) == doctest::Approx(0.6));
  for (int R = 1; R <= 20; ++R) CHECK(u_eval(R - 1, 1.0) == doctest::Approx(R));
  CHECK(u_eval(7, std::cos(0.3)) == doctest::Approx(std::sin(2.4) / std::sin(0.3)).epsilon(1e-13));
}

TEST_CASE("sin t U_n(cos t) = sin((n+1) t)") {
  double worst = 0.0;
  for (int n = 0; n <= 32; ++n)
    for (int k = 1; k < 10000; ++k) {
      const double t = k * PI / 10000;
      worst = std::max(worst, std::abs(std::sin(t) * u_eval(n, std::cos(t)) - std::sin((n + 1) * t)));
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("derivatives against differences") {
  for (int n : {3, 7, 12})
    for (double t : {-0.9, -0.2, 0.35, 0.8}) {
      const double h = 1e-5;
      const auto v = u_eval_full(n, t);
      CHECK(v.d1 == doctest::Approx((u_eval(n, t + h) - u_eval(n, t - h)) / (2 * h)).epsilon(1e-7));
      CHECK(v.d2 == doctest::Approx((u_eval_full(n, t + h).d1 - u_eval_full(n, t - h).d1) / (2 * h)).epsilon(1e-6));
    }
}

TEST_CASE("catalog structure") {
  for (int R = 2; R <= 30; ++R) {
    const auto c = build_catalog(R);
    REQUIRE(c.q.size() == static_cast<std::size_t>(R - 2));
    REQUIRE(c.p.size() == static_cast<std::size_t>(R + 1));
    for (int j = 1; j <= R - 2; ++j) {
      CHECK(c.p[j] < c.q[j - 1]);
      CHECK(c.q[j - 1] < c.p[j + 1]);
      CHECK(((j % 2 == 0) ? 1.0 : -1.0) * c.M[j - 1] > 0);
      CHECK(std::abs(c.M[j - 1]) <= R);
      CHECK(std::abs(c.profile_dt(c.q[j - 1])) < 1e-9 * R * R);
      CHECK(std::abs(c.q[j - 1] + c.q[R - 2 - j] - PI) < 1e-12);
    }
    if (R % 2 == 0) {
      CHECK(c.theta_minus == PI / 4);
    } else {
      CHECK(c.theta_minus > 0);
      CHECK(c.theta_minus < PI / 4);
      if (R >= 3) CHECK(std::abs(c.q[(R - 1) / 2 - 1] - PI / 2) < 1e-13);
    }
  }
  const auto two = build_catalog(2);
  CHECK(two.q.empty());
  CHECK(two.theta_minus == PI / 4);
  CHECK_THROWS_AS(build_catalog(1), std::invalid_argument);
}

TEST_CASE("extremum angles for R = 8 and 9") {
  const double q8[] = {0.179749, 0.309108, 0.436495, 0.563505, 0.690892, 0.820251};
  const auto c8 = build_catalog(8);
  for (int j = 0; j < 6; ++j) CHECK(std::abs(c8.q[j] / PI - q8[j]) < 1e-5);
  const double q9[] = {0.159593, 0.274419, 0.387439, 0.500000, 0.612561, 0.725581, 0.840407};
  const auto c9 = build_catalog(9);
  for (int j = 0; j < 7; ++j) CHECK(std::abs(c9.q[j] / PI - q9[j]) < 1e-5);
}

TEST_CASE("q solves tan(R t) = R tan(t)") {
  // independent characterisation of the extrema of sin(Rt)/sin(t)
  for (int R : {5, 8, 13}) {
    const auto c = build_catalog(R);
    for (double q : c.q) CHECK(std::abs(R * std::cos(R * q) * std::sin(q) - std::sin(R * q) * std::cos(q)) < 1e-12 * R);
  }
}

TEST_CASE("theta resolution") {
  for (double a : {-2.0, -0.5, 0.0, 0.7, 3.0})
    for (double b : {-1.5, 0.0, 0.25, 4.0}) {
      if (a == 0.0 && b == 0.0) continue;
      const double t = resolve_theta(a, b);
      CHECK(t >= 0.0);
      CHECK(t < PI);
      CHECK(std::abs(a * std::cos(t) + b * std::sin(t)) < 1e-14 * (std::abs(a) + std::abs(b)));
    }
  CHECK_THROWS(resolve_theta(0.0, 0.0));
}

TEST_CASE("special theta catalogs for R = 8 and 9") {
  const auto t8 = build_theta_catalog(8);
  const std::vector<double> To8 = {0.161605, 0.185335, 0.223323, 0.25,     0.276677, 0.314665, 0.338395,
                                   0.661605, 0.685335, 0.723323, 0.75,     0.776677, 0.814665, 0.838395};
  const std::vector<double> Tx8 = {0.040363, 0.047665, 0.071705, 0.928295, 0.952335, 0.959636};
  const std::vector<double> Ty8 = {0.428295, 0.452335, 0.459636, 0.540363, 0.547665, 0.571705};
  REQUIRE(t8.T_o.size() == To8.size());
  REQUIRE(t8.T_x.size() == Tx8.size());
  REQUIRE(t8.T_y.size() == Ty8.size());
  for (std::size_t k = 0; k < To8.size(); ++k) CHECK(std::abs(t8.T_o[k] / PI - To8[k]) < 1e-5);
  for (std::size_t k = 0; k < Tx8.size(); ++k) CHECK(std::abs(t8.T_x[k] / PI - Tx8[k]) < 1e-5);
  for (std::size_t k = 0; k < Ty8.size(); ++k) CHECK(std::abs(t8.T_y[k] / PI - Ty8[k]) < 1e-5);

  const auto t9 = build_theta_catalog(9);
  const std::vector<double> To9 = {0.145132, 0.181901, 0.217145, 0.239975, 0.260025, 0.282855, 0.318099,
                                   0.354868, 0.653215, 0.707395, 0.75,     0.792605, 0.846785};
  const std::vector<double> Tx9 = {0.037494, 0.070922, 0.953949, 0.964777};
  const std::vector<double> Ty9 = {0.429078, 0.462505, 0.535223, 0.546050};
  REQUIRE(t9.T_o.size() == To9.size());
  REQUIRE(t9.T_x.size() == Tx9.size());
  REQUIRE(t9.T_y.size() == Ty9.size());
  for (std::size_t k = 0; k < To9.size(); ++k) CHECK(std::abs(t9.T_o[k] / PI - To9[k]) < 1e-5);
  for (std::size_t k = 0; k < Tx9.size(); ++k) CHECK(std::abs(t9.T_x[k] / PI - Tx9[k]) < 1e-5);
  for (std::size_t k = 0; k < Ty9.size(); ++k) CHECK(std::abs(t9.T_y[k] / PI - Ty9[k]) < 1e-5);
  CHECK(std::any_of(t9.T_o.begin(), t9.T_o.end(), [](double t) { return std::abs(t - 0.75 * PI) < 1e-12; }));
}

TEST_CASE("theta(q_j, q_i) = pi/2 - theta(q_i, q_j) mod pi") {
  for (int R : {5, 8, 9, 14}) {
    const auto c = build_catalog(R);
    const int n = R - 2;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const double s = theta_interior(c, i, j) + theta_interior(c, j, i);
        const double r = std::fmod(s - PI / 2 + 4 * PI, PI);
        CHECK(std::min(r, PI - r) < 1e-12);
      }
  }
}

TEST_CASE("odd R identities") {
  // q_r = pi/2 gives M_r = (-1)^r, so theta(q_r, q_r) = 3pi/4
  for (int R : {5, 7, 9, 11}) {
    const auto c = build_catalog(R);
    const int r = (R - 1) / 2;
    CHECK(std::abs(theta_interior(c, r, r) - 0.75 * PI) < 1e-13);
  }
}

TEST_CASE("small R") {
  CHECK(build_theta_catalog(2).T_o.empty());
  CHECK(build_theta_catalog(2).all().empty());
  const auto t3 = build_theta_catalog(3);
  REQUIRE(t3.T_o.size() == 1);
  CHECK(t3.T_o[0] == doctest::Approx(0.75 * PI));
  REQUIRE(t3.T_x.size() == 1);
  CHECK(t3.T_x[0] == doctest::Approx(std::atan(1.0 / 3.0)));
  REQUIRE(t3.T_y.size() == 1);
  CHECK(t3.T_y[0] == doctest::Approx(std::atan(3.0)));
}
