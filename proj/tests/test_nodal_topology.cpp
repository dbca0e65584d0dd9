#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "nodal/nodal_topology.hpp"
#include "oracles/cell_graph.hpp"

using namespace nodal;
constexpr double PI = std::numbers::pi;

TEST_CASE("oracle sanity") {
  CHECK(oracle::one_r_domains(3, 0.0) == 3);
  CHECK(oracle::one_r_domains(8, 0.0) == 8);
  CHECK(oracle::one_r_domains(8, PI / 2) == 8);
  CHECK(oracle::one_r_domains(2, PI / 4) == 2);
}

TEST_CASE("domain counts on known cases") {
  CHECK(count_nodal_domains(1, 3, 0.0, 0) == 3);
  CHECK(count_nodal_domains(1, 4, PI / 4, 0) == 4);
  CHECK(count_nodal_domains(1, 1, 0.3, 0) == 1);
  CHECK(count_nodal_domains(2, 2, 0.0, 0) == 4);
  CHECK(count_nodal_domains(2, 3, 0.0, 0) == 6);
  CHECK(count_nodal_domains(2, 3, 0.4, 0) == 4);
  for (int r = 1; r <= 5; ++r) {
    CHECK(count_nodal_domains(1, 2 * r, PI / 4 - 0.01, 0) == 2);
    CHECK(count_nodal_domains(1, 2 * r, PI / 4, 0) == 2 * r);
  }
  CHECK_THROWS_AS(count_nodal_domains(1, 4, 0.3, 10), std::invalid_argument);
  CHECK_THROWS_AS(count_nodal_domains(3, 3, 0.75 * PI, 0), std::invalid_argument);
}

TEST_CASE("(1,R) domain counts agree with the cell-graph oracle") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(0, PI);
  for (int R : {2, 3, 4, 5, 6, 7, 8, 9}) {
    std::vector<double> thetas{0.0, PI / 4, PI / 2, 0.75 * PI};
    for (double t : build_theta_catalog(R).all()) thetas.push_back(t);
    for (int k = 0; k < 12; ++k) thetas.push_back(U(rng));
    for (double t : thetas) {
      INFO("R=" << R << " theta=" << t);
      CHECK(count_nodal_domains(1, R, t, 0) == oracle::one_r_domains(R, t));
    }
  }
}

TEST_CASE("resolution doubling") {
  for (auto [m, n, t] : {std::tuple{1, 3, 0.3}, {1, 4, PI / 4}, {2, 3, 1.0}, {1, 8, 0.2}, {1, 7, 0.75 * PI}}) {
    const int N = default_resolution(m, n);
    CHECK(count_nodal_domains(m, n, t, N) == count_nodal_domains(m, n, t, 2 * N));
  }
}

TEST_CASE("domain count is symmetric under theta -> pi/2 - theta") {
  for (double t : {0.1, 0.3, 0.6, 1.2, 2.0, 2.8})
    for (int R : {3, 4, 8, 9})
      CHECK(count_nodal_domains(1, R, t, 0) == count_nodal_domains(1, R, canonical_theta(PI / 2 - t), 0));
}

TEST_CASE("checkerboard") {
  for (int R : {3, 4, 8, 9}) {
    const auto mask = make_checkerboard(R, 0.3);
    const auto w = static_cast<int>(mask.white_squares.size());
    CHECK((w == R * R / 2 || w == (R * R + 1) / 2));
    const auto other = make_checkerboard(R, 2.0);
    for (int i = 0; i < R; ++i)
      for (int j = 0; j < R; ++j) CHECK(mask.is_white(i, j) != other.is_white(i, j));
  }
  CHECK(checkerboard_violations(8, 0.2 * PI, 0) == 0);
  CHECK(checkerboard_violations(9, 0.6 * PI, 0) == 0);
  CHECK(checkerboard_violations(3, PI / 4, 512) == 0);
  CHECK(checkerboard_violations(ThetaFamily(2, 3, 0.9), 0) == 0);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(0.01, PI - 0.01);
  for (int k = 0; k < 20; ++k) {
    const double t = U(rng);
    if (std::abs(t - PI / 2) < 0.01) continue;
    CHECK(checkerboard_violations(7, t, 0) == 0);
  }
}

TEST_CASE("Q-square patterns") {
  const auto th = build_theta_catalog(8);
  const auto cat = build_catalog(8);
  // at a T_o value the square holding the critical zero is InnerC
  bool any_c = false;
  for (int i = 1; i < 7 && !any_c; ++i)
    for (int j = 1; j < 7; ++j) {
      const double t = theta_interior(cat, i, j);
      const auto p = classify_q_pattern(8, t, i, j);
      if (p.pattern == PatternKind::InnerC) any_c = true;
    }
  CHECK(any_c);
  CHECK(classify_q_pattern(8, PI / 4, 0, 7).pattern == PatternKind::BoundaryA);

  for (const auto& [sq, p] : q_pattern_map(8, 0.24 * PI)) CHECK(p != PatternKind::InnerC);
  for (double t : {0.1, 0.24 * PI, 0.6, 2.0})
    for (const auto& [sq, p] : q_pattern_map(8, t)) {
      if (p != PatternKind::BoundaryB) continue;
      bool in_t = false;
      for (double s : th.T_x) in_t = in_t || dist_mod_pi(s, t) < 1e-9;
      for (double s : th.T_y) in_t = in_t || dist_mod_pi(s, t) < 1e-9;
      CHECK(in_t);
    }
  for (double t : th.T_x) {
    bool any_b = false;
    for (const auto& [sq, p] : q_pattern_map(8, t)) any_b = any_b || p == PatternKind::BoundaryB;
    CHECK(any_b);
  }
  const auto mask = make_checkerboard(8, 0.3);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!mask.is_white(i, j)) CHECK_THROWS_AS(classify_q_pattern(8, 0.3, i, j), std::invalid_argument);
}

TEST_CASE("Z structure") {
  for (int R = 2; R <= 12; ++R) {
    INFO("R=" << R);
    const auto rep = verify_z_structure(R);
    CHECK(rep.pass());
    const int r = R / 2;
    if (R % 2 == 0) {
      CHECK(rep.plus.closed_curves == r - 1);
      CHECK(rep.minus.closed_curves == r - 1);
      REQUIRE(rep.median_sign_claim.has_value());
      CHECK(*rep.median_sign_claim);
    } else {
      CHECK(rep.plus.closed_curves == r);
      CHECK(rep.minus.closed_curves == r - 1);
    }
    CHECK(rep.plus.closed_curves == rep.plus.closed_curves_from_domains);
    CHECK(rep.minus.closed_curves == rep.minus.closed_curves_from_domains);
  }
  const auto two = verify_z_structure(2);
  CHECK(two.plus.closed_curves == 0);
  CHECK(two.plus.summary.domain_count == 2);
}

TEST_CASE("desingularization direction") {
  auto d = desingularization_check(8, PI / 4 - 0.01);
  CHECK(d.squares.size() == 6);
  CHECK(d.all_agree);
  CHECK(d.direction == Opening::Horizontal);
  d = desingularization_check(8, PI / 4 + 0.01);
  CHECK(d.all_agree);
  CHECK(d.direction == Opening::Vertical);
  d = desingularization_check(9, 0.75 * PI - 0.01);
  CHECK(d.all_agree);
  CHECK(d.direction == Opening::Vertical);
  d = desingularization_check(9, 0.75 * PI + 0.01);
  CHECK(d.all_agree);
  CHECK(d.direction == Opening::Horizontal);
  CHECK_THROWS_AS(desingularization_check(8, PI / 4), std::invalid_argument);
  CHECK_THROWS_AS(desingularization_check(2, 0.7), std::invalid_argument);
}

TEST_CASE("sweeps") {
  auto rep = sweep(1, 3);
  CHECK(rep.anomalies() == 0);
  CHECK(rep.counts() == std::set<int>{2, 3, 4});
  rep = sweep(2, 3);
  CHECK(rep.counts() == std::set<int>{4, 6});
  for (const auto& s : rep.samples)
    if (s.domain_count == 6) CHECK((s.theta == 0.0 || std::abs(s.theta - PI / 2) < 1e-12));
  rep = sweep(1, 4);
  CHECK(rep.max_count() == 4);
  CHECK(rep.counts().count(2) == 1);

  SweepOptions o;
  o.lo = 0;
  o.hi = PI / 4;
  o.samples_per_interval = 3;
  rep = sweep(1, 8, o);
  CHECK(rep.anomalies() == 0);
  std::map<int, std::set<int>> by_interval;
  for (const auto& s : rep.samples)
    if (!s.is_breakpoint) by_interval[s.interval].insert(s.domain_count);
  for (const auto& [k, c] : by_interval) CHECK(c.size() == 1);

  SweepOptions serial = o;
  serial.parallel = false;
  const auto rs = sweep(1, 8, serial);
  REQUIRE(rs.samples.size() == rep.samples.size());
  for (std::size_t k = 0; k < rs.samples.size(); ++k) CHECK(rs.samples[k].domain_count == rep.samples[k].domain_count);
}

TEST_CASE("Courant bound and lattice regularity") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> U(0, PI);
  for (auto [m, n] : {std::pair{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {1, 6}}) {
    for (int k = 0; k < 6; ++k) {
      const ThetaFamily f(m, n, U(rng));
      const auto s = summarize(f);
      CHECK(s.domain_count >= 1);
      CHECK(s.courant_ok());
    }
  }
  for (int R : {3, 5, 8})
    for (double t : {0.2, 1.0, 2.5}) {
      const ThetaFamily f(1, R, t);
      for (const auto& p : lattice_points(R)) {
        CHECK(std::abs(eval(f, p[0], p[1])) < 1e-12);
        const auto g = grad(f, p[0], p[1]);
        CHECK(std::hypot(g[0], g[1]) > 1e-3);
      }
    }
}

TEST_CASE("every interior nodal component meets the lattice") {
  for (auto [R, t] : {std::pair{8, 0.3}, {9, 2.0}, {6, PI / 4 - 0.05}, {5, 1.1}}) {
    const ThetaFamily f(1, R, t);
    const auto grid = sample_grid(f, default_resolution(1, R));
    const auto cs = extract_contours(grid);
    const double h = PI / grid.resolution;
    std::vector<bool> touches(cs.components, false);
    for (std::size_t s = 0; s < cs.segments.size(); ++s)
      for (const auto& p : {cs.segments[s].a, cs.segments[s].b}) {
        const double i = p[0] * R / PI, j = p[1] * R / PI;
        const double ri = std::round(i), rj = std::round(j);
        if (ri < 1 || ri > R - 1 || rj < 1 || rj > R - 1) continue;
        if (std::abs(i - ri) * PI / R < 2 * h && std::abs(j - rj) * PI / R < 2 * h)
          touches[cs.segment_component[s]] = true;
      }
    for (int c = 0; c < cs.components; ++c) CHECK(touches[c]);
  }
}
