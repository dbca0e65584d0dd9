#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "nodal/angle.hpp"
#include "nodal/critical_zeroes.hpp"

using namespace nodal;
constexpr double PI = std::numbers::pi;

namespace {

bool degenerate_at(const std::vector<CriticalZero>& v, double x, double y) {
  return std::any_of(v.begin(), v.end(), [&](const CriticalZero& z) {
    return std::abs(z.x - x) < 1e-12 && std::abs(z.y - y) < 1e-12 && z.degenerate && z.order == 4;
  });
}

int count_degenerate(const std::vector<CriticalZero>& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](const CriticalZero& z) { return z.degenerate; }));
}

void check_is_critical_zero(const ThetaFamily& f, const CriticalZero& z) {
  const auto g = grad(f, z.x, z.y);
  CHECK(std::abs(eval(f, z.x, z.y)) < 1e-10);
  CHECK(std::hypot(g[0], g[1]) < 1e-8);
}

bool in_set(const std::vector<double>& set, double t) {
  return std::any_of(set.begin(), set.end(), [t](double s) { return dist_mod_pi(s, t) < 1e-9; });
}

}  // namespace

TEST_CASE("vertices") {
  auto v = vertex_classification(8, PI / 4);
  REQUIRE(v.size() == 4);
  CHECK(degenerate_at(v, 0, PI));
  CHECK(degenerate_at(v, PI, 0));
  CHECK(count_degenerate(v) == 2);

  CHECK(count_degenerate(vertex_classification(9, PI / 2)) == 0);
  CHECK(count_degenerate(vertex_classification(8, 0.0)) == 0);
  CHECK(count_degenerate(vertex_classification(9, 0.75 * PI)) == 4);
  v = vertex_classification(8, 0.75 * PI);
  CHECK(degenerate_at(v, 0, 0));
  CHECK(degenerate_at(v, PI, PI));
  CHECK(count_degenerate(vertex_classification(9, PI / 4)) == 0);
  for (const auto& z : vertex_classification(6, 0.3)) CHECK(z.locus == Locus::Vertex);
}

TEST_CASE("edges in the product case") {
  const auto e = edge_critical_zeroes(8, 0.0);
  CHECK(e.size() == 14);
  CHECK(count_degenerate(e) == 0);
  std::vector<double> left;
  for (const auto& z : e)
    if (z.edge == Edge::Left) left.push_back(z.y);
  REQUIRE(left.size() == 7);
  std::sort(left.begin(), left.end());
  for (int j = 1; j <= 7; ++j) CHECK(left[j - 1] == doctest::Approx(j * PI / 8).epsilon(1e-13));
}

TEST_CASE("no open-edge zeroes at pi/4 for even R") {
  for (int R : {2, 4, 6, 8, 10, 12}) CHECK(edge_critical_zeroes(R, PI / 4).empty());
}

TEST_CASE("odd R has no open-edge zeroes between theta_minus and pi/2 - theta_minus") {
  for (int R : {5, 7, 9, 11}) {
    const auto cat = build_catalog(R);
    const double a = cat.theta_minus, b = PI / 2 - cat.theta_minus;
    for (int k = 1; k < 20; ++k) CHECK(edge_critical_zeroes(cat, a + (b - a) * k / 20).empty());
  }
}

TEST_CASE("edge zeroes are critical zeroes, symmetric, and degenerate only on T_x u T_y") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(0, PI);
  for (int R : {3, 4, 7, 8, 9}) {
    const auto cat = build_catalog(R);
    const auto th = build_theta_catalog(cat);
    std::vector<double> thetas;
    for (int k = 0; k < 40; ++k) thetas.push_back(U(rng));
    thetas.insert(thetas.end(), th.T_x.begin(), th.T_x.end());
    thetas.insert(thetas.end(), th.T_y.begin(), th.T_y.end());
    for (double t : thetas) {
      const ThetaFamily f(1, R, t);
      const auto e = edge_critical_zeroes(cat, t);
      for (const auto& z : e) {
        check_is_critical_zero(f, z);
        const bool mirrored = std::any_of(e.begin(), e.end(), [&](const CriticalZero& w) {
          return std::abs(w.x - (PI - z.x)) < 1e-9 && std::abs(w.y - (PI - z.y)) < 1e-9 && w.order == z.order;
        });
        CHECK(mirrored);
        if (z.degenerate) {
          CHECK(z.order == 3);
          CHECK((in_set(th.T_x, t) || in_set(th.T_y, t)));
        }
      }
    }
    for (double t : th.T_x) {
      const auto e = edge_critical_zeroes(cat, t);
      CHECK(count_degenerate(e) >= 1);
    }
  }
}

TEST_CASE("interior critical zeroes") {
  for (int R : {4, 6, 8, 10, 12}) {
    const auto z = interior_critical_zeroes(R, PI / 4);
    CHECK(z.size() == static_cast<std::size_t>(R - 2));
    for (const auto& p : z) {
      CHECK(std::abs(p.x + p.y - PI) < 1e-10);
      check_is_critical_zero(ThetaFamily(1, R, PI / 4), p);
      CHECK_FALSE(p.degenerate);
    }
  }
  for (int R : {5, 7, 9, 11}) {
    CHECK(interior_critical_zeroes(R, PI / 4).empty());
    const auto z = interior_critical_zeroes(R, 0.75 * PI);
    CHECK(z.size() == static_cast<std::size_t>(2 * R - 5));
    for (const auto& p : z) {
      const bool on_diagonal = std::abs(p.x - p.y) < 1e-10 || std::abs(p.x + p.y - PI) < 1e-10;
      CHECK(on_diagonal);
      check_is_critical_zero(ThetaFamily(1, R, 0.75 * PI), p);
    }
  }
  // away from the catalog there are none
  const auto th = build_theta_catalog(8);
  for (int k = 0; k < 200; ++k) {
    const double t = (k + 0.5) * PI / 200;
    if (in_set(th.T_o, t)) continue;
    CHECK(interior_critical_zeroes(8, t).empty());
  }
}

TEST_CASE("three-mode cases") {
  CHECK(case3_critical_zeroes(2, 3, 0.3).empty());
  CHECK(case3_critical_zeroes(2, 3, 2.0).empty());
  auto c = case3_critical_zeroes(1, 3, 0.75 * PI);
  REQUIRE(c.size() == 1);
  CHECK(c[0].x == doctest::Approx(PI / 2));
  CHECK(c[0].y == doctest::Approx(PI / 2));
  CHECK(case3_critical_zeroes(1, 3, 0.25 * PI).empty());

  c = case3_critical_zeroes(1, 4, 0.25 * PI);
  REQUIRE(c.size() == 2);
  for (const auto& z : c) {
    CHECK(std::abs(z.x + z.y - PI) < 1e-12);  // on the anti-diagonal u + v = 0
    check_is_critical_zero(ThetaFamily(1, 4, 0.25 * PI), z);
    CHECK(local_order(ThetaFamily(1, 4, 0.25 * PI), z.x, z.y, 1e-4) == 2);
  }
  c = case3_critical_zeroes(1, 4, 0.75 * PI);
  REQUIRE(c.size() == 2);
  for (const auto& z : c) check_is_critical_zero(ThetaFamily(1, 4, 0.75 * PI), z);
  CHECK(case3_critical_zeroes(1, 4, 0.4).empty());
  CHECK_THROWS_AS(case3_critical_zeroes(3, 4, 0.1), std::invalid_argument);

  // product cases of (2,3): crossings of the nodal lines
  c = case3_critical_zeroes(2, 3, 0.0);
  CHECK(c.size() == 2);
  for (const auto& z : c) check_is_critical_zero(ThetaFamily(2, 3, 0.0), z);
}

TEST_CASE("Newton search agrees with the closed forms") {
  const auto cat = build_catalog(8);
  const double t = theta_interior(cat, 2, 5);
  const auto exact = interior_critical_zeroes(cat, t);
  const auto found = find_interior_critical_zeroes_numeric(ThetaFamily(1, 8, t));
  REQUIRE(found.size() == exact.size());
  for (std::size_t k = 0; k < exact.size(); ++k) {
    CHECK(found[k].x == doctest::Approx(exact[k].x).epsilon(1e-9));
    CHECK(found[k].y == doctest::Approx(exact[k].y).epsilon(1e-9));
    CHECK(found[k].order == 2);
  }
  CHECK(find_interior_critical_zeroes_numeric(ThetaFamily(1, 5, 0.75 * PI)).size() == 5);
  CHECK(find_interior_critical_zeroes_numeric(ThetaFamily(2, 3, 0.3)).empty());
  CHECK(find_interior_critical_zeroes_numeric(ThetaFamily(1, 4, 0.25 * PI)).size() == 2);
  CHECK(find_interior_critical_zeroes_numeric(ThetaFamily(1, 9, 0.3)).empty());
  CHECK(find_interior_critical_zeroes_numeric(ThetaFamily(2, 3, 0.0)).size() == 2);
}

TEST_CASE("inventory covers (R,1) through the transposition") {
  const auto a = critical_inventory(ThetaFamily(1, 6, 0.2));
  const auto b = critical_inventory(ThetaFamily(6, 1, PI / 2 - 0.2));
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].x == doctest::Approx(b[k].x));
    CHECK(a[k].y == doctest::Approx(b[k].y));
    CHECK(a[k].order == b[k].order);
  }
  CHECK_THROWS_AS(critical_inventory(ThetaFamily(3, 3, 0.75 * PI)), std::invalid_argument);
}

TEST_CASE("boundary zeroes of non-separable modes") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(0.01, PI - 0.01);
  for (int k = 0; k < 60; ++k) {
    double t = U(rng);
    if (std::abs(t - PI / 2) < 0.01) t += 0.02;
    const ThetaFamily f(2, 3, t);
    const auto b = boundary_critical_zeroes(f);
    for (const auto& z : b)
      if (z.locus == Locus::Edge) check_is_critical_zero(f, z);
    const auto h = boundary_hits(f);
    CHECK(h.distinct == 6);
  }
  for (int k = 0; k < 200; ++k) {
    const double t = (k + 0.5) * PI / 200;
    CHECK(boundary_hits(ThetaFamily(1, 4, t)).with_multiplicity <= 6);
  }
}

TEST_CASE("critical zero set is centrally symmetric") {
  for (double t : {0.05, 0.3, 0.25 * PI, 0.75 * PI, 2.9}) {
    const auto all = critical_inventory(ThetaFamily(1, 7, t));
    for (const auto& z : all) {
      const bool mirrored = std::any_of(all.begin(), all.end(), [&](const CriticalZero& w) {
        return std::abs(w.x - (PI - z.x)) < 1e-9 && std::abs(w.y - (PI - z.y)) < 1e-9;
      });
      CHECK(mirrored);
    }
  }
}
