#include "nodal/nodal_topology.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "nodal/angle.hpp"

namespace nodal {

// ---- domain counting ----

int count_nodal_domains(const ThetaFamily& f, int resolution) {
  const int res = resolution == 0 ? default_resolution(f.m(), f.n()) : resolution;
  return label_domains(sample_grid(f, res, true)).count;
}

int count_nodal_domains(int m, int n, double theta, int resolution) {
  return count_nodal_domains(ThetaFamily(m, n, theta), resolution);
}

// ---- checkerboard ----

CheckerboardMask make_checkerboard(int R, double theta) {
  if (R < 1) throw std::invalid_argument("make_checkerboard: R must be >= 1");
  CheckerboardMask mask;
  mask.R = R;
  const double c = std::cos(canonical_theta(theta));
  mask.polarity = std::abs(c) < 1e-15 ? 0 : (c > 0 ? 1 : -1);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j)
      if (((i + j) % 2 == 0 ? 1 : -1) * mask.polarity == -1) mask.white_squares.insert({i, j});
  return mask;
}

long checkerboard_violations(const ThetaFamily& f, int resolution) {
  const int res = resolution == 0 ? default_resolution(f.m(), f.n()) : resolution;
  const NodalGrid g = sample_grid(f, res, false);
  const int m = f.m(), n = f.n();
  const double cs = f.cos_theta() * f.sin_theta();
  const int K = g.nx();
  std::vector<char> grey(K * K);
  std::vector<int> cell_x(K), cell_y(K);
  for (int i = 0; i < K; ++i) {
    const double t = g.xs[i];
    cell_x[i] = static_cast<int>(std::floor(t * m / pi)) * (n + 1) + static_cast<int>(std::floor(t * n / pi));
  }
  cell_y = cell_x;
  for (int j = 0; j < K; ++j)
    for (int i = 0; i < K; ++i) {
      const double x = g.xs[i], y = g.ys[j];
      const double X = std::sin(m * x) * std::sin(n * y);
      const double Y = std::sin(n * x) * std::sin(m * y);
      grey[j * K + i] = cs * X * Y > 0.0;
    }
  long bad = 0;
  const auto check = [&](int i0, int j0, int i1, int j1) {
    if (!grey[j0 * K + i0] || !grey[j1 * K + i1]) return;
    if (cell_x[i0] != cell_x[i1] || cell_y[j0] != cell_y[j1]) return;
    const int s0 = g.sign(i0, j0), s1 = g.sign(i1, j1);
    if (s0 == 0 || s1 == 0 || s0 != s1) ++bad;
  };
  for (int j = 0; j < K; ++j)
    for (int i = 0; i < K; ++i) {
      if (i + 1 < K) check(i, j, i + 1, j);
      if (j + 1 < K) check(i, j, i, j + 1);
    }
  return bad;
}

long checkerboard_violations(int R, double theta, int resolution) {
  return checkerboard_violations(ThetaFamily(1, R, theta), resolution);
}

// ---- Q-square patterns ----

std::string to_string(PatternKind p) {
  switch (p) {
    case PatternKind::InnerA: return "InnerA";
    case PatternKind::InnerB: return "InnerB";
    case PatternKind::InnerC: return "InnerC";
    case PatternKind::BoundaryA: return "BoundaryA";
    case PatternKind::BoundaryB: return "BoundaryB";
    case PatternKind::BoundaryC: return "BoundaryC";
    case PatternKind::BoundaryD: return "BoundaryD";
  }
  return "?";
}

namespace {

int sign_of(double v, double tol) { return std::abs(v) <= tol ? 0 : (v > 0 ? 1 : -1); }

// Sign changes of fn over points t_k in [a, b]; the extremum c and both ends
// are included, so the monotone pieces are probed exactly.
int segment_sign_changes(const std::function<double(double)>& fn, double a, double b, double c, double tol) {
  std::vector<double> ts;
  constexpr int K = 16;
  for (int k = 1; k < K; ++k) {
    ts.push_back(a + (c - a) * k / K);
    ts.push_back(c + (b - c) * k / K);
  }
  ts.push_back(c);
  ts.push_back(a);
  ts.push_back(b);
  std::sort(ts.begin(), ts.end());
  int changes = 0, prev = 0;
  for (double t : ts) {
    const int s = sign_of(fn(t), tol);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

bool in_range(double t, double a, double b) { return t >= a - 1e-12 && t <= b + 1e-12; }

}  // namespace

QPattern classify_q_pattern(const ChebyshevCatalog& cat, const std::vector<CriticalZero>& boundary, double theta,
                            int i, int j) {
  const int R = cat.R;
  if (i < 0 || j < 0 || i >= R || j >= R) throw std::invalid_argument("classify_q_pattern: square out of range");
  theta = canonical_theta(theta);
  if (!make_checkerboard(R, theta).is_white(i, j))
    throw std::invalid_argument("classify_q_pattern: Q-square is grey at this theta");

  QPattern out{i, j, PatternKind::InnerA};
  const double c = std::cos(theta), s = std::sin(theta);
  const double tol = kDegenerateTol * R;
  const bool inner = i >= 1 && j >= 1 && i <= R - 2 && j <= R - 2;
  if (inner) {
    const double qi = cat.q[i - 1], qj = cat.q[j - 1];
    const double Mi = cat.M[i - 1], Mj = cat.M[j - 1];
    const double centre = c * Mj + s * Mi;
    if (std::abs(centre) <= tol) {
      out.pattern = PatternKind::InnerC;
      return out;
    }
    const auto along_x = [&](double x) { return c * Mj + s * cat.profile(x); };
    const auto along_y = [&](double y) { return c * cat.profile(y) + s * Mi; };
    const int h = segment_sign_changes(along_x, cat.p[i], cat.p[i + 1], qi, tol);
    const int v = segment_sign_changes(along_y, cat.p[j], cat.p[j + 1], qj, tol);
    if (h > 0 && v == 0) out.pattern = PatternKind::InnerA;
    else if (v > 0 && h == 0) out.pattern = PatternKind::InnerB;
    else throw std::logic_error("classify_q_pattern: inconsistent segment probes");
    return out;
  }

  const double x0 = cat.p[i], x1 = cat.p[i + 1], y0 = cat.p[j], y1 = cat.p[j + 1];
  int simple = 0, triple = 0;
  for (const auto& z : boundary) {
    if (!in_range(z.x, x0, x1) || !in_range(z.y, y0, y1)) continue;
    if (z.locus == Locus::Edge) {
      if (z.order == 3) ++triple;
      else ++simple;
    } else if (z.locus == Locus::Vertex && z.degenerate) {
      ++simple;
    }
  }
  if (triple > 0) out.pattern = PatternKind::BoundaryB;
  else if (simple == 0) out.pattern = PatternKind::BoundaryD;
  else if (simple == 1) out.pattern = PatternKind::BoundaryA;
  else out.pattern = PatternKind::BoundaryC;
  return out;
}

QPattern classify_q_pattern(int R, double theta, int i, int j) {
  if (R < 2) throw std::invalid_argument("classify_q_pattern: R must be >= 2");
  const auto cat = build_catalog(R);
  return classify_q_pattern(cat, boundary_critical_zeroes(ThetaFamily(1, R, theta)), theta, i, j);
}

std::map<Square, PatternKind> q_pattern_map(int R, double theta) {
  std::map<Square, PatternKind> out;
  if (R < 2) return out;
  const auto cat = build_catalog(R);
  const auto boundary = boundary_critical_zeroes(ThetaFamily(1, R, theta));
  for (const auto& [i, j] : make_checkerboard(R, theta).white_squares)
    out[{i, j}] = classify_q_pattern(cat, boundary, theta, i, j).pattern;
  return out;
}

// ---- summaries ----

int NodalSummary::count(Locus l) const {
  return static_cast<int>(std::count_if(critical_zeroes.begin(), critical_zeroes.end(),
                                        [l](const CriticalZero& z) { return z.locus == l; }));
}

NodalSummary summarize(const ThetaFamily& f, int resolution) {
  NodalSummary s;
  s.m = f.m();
  s.n = f.n();
  s.theta = f.theta();
  const int res = resolution > 0 ? resolution : default_resolution(f.m(), f.n());
  s.resolution = aligned_resolution(f.m(), f.n(), res);
  s.domain_count = count_nodal_domains(f, res);
  s.critical_zeroes = critical_inventory(f);
  s.boundary_hits = boundary_hits(f);
  if (f.m() == 1 && f.n() >= 2) s.q_patterns = q_pattern_map(f.n(), f.theta());
  s.courant_index = first_index_of({std::min(f.m(), f.n()), std::max(f.m(), f.n())});
  return s;
}

// ---- Z+ / Z- ----

bool ZCurveReport::pass() const {
  return closed_curves == expected_closed_curves && closed_curves_from_domains == expected_closed_curves &&
         contains_diagonal == expected_diagonal && contains_anti_diagonal == expected_anti_diagonal &&
         summary.domain_count == expected_domain_count;
}

bool ZStructureReport::pass() const { return plus.pass() && minus.pass() && median_sign_claim.value_or(true); }

namespace {

ZCurveReport z_curves(int R, bool plus, int resolution) {
  ZCurveReport rep;
  rep.plus = plus;
  const ThetaFamily f(1, R, plus ? pi / 4 : 3 * pi / 4);
  const double c = f.cos_theta(), s = f.sin_theta();

  const auto phi = [&](double x, double y) { return c * u_eval(R - 1, std::cos(y)) + s * u_eval(R - 1, std::cos(x)); };
  double diag = 0.0, anti = 0.0;
  constexpr int K = 1000;
  for (int k = 0; k < K; ++k) {
    const double t = (k + 0.5) * pi / K;
    diag = std::max(diag, std::abs(phi(t, t)));
    anti = std::max(anti, std::abs(phi(t, pi - t)));
  }
  rep.contains_diagonal = diag <= 1e-10 * R;
  rep.contains_anti_diagonal = anti <= 1e-10 * R;

  // Remove the diagonals from the nodal set by dividing them out; what is
  // left is the union of the closed curves.
  const bool dd = rep.contains_diagonal, da = rep.contains_anti_diagonal;
  const auto quotient = [=](double x, double y) {
    const double u = std::cos(x), v = std::cos(y);
    double q = c * u_eval(R - 1, v) + s * u_eval(R - 1, u);
    if (dd) q /= (u - v);
    if (da) q /= (u + v);
    return q;
  };
  const int N = aligned_resolution(1, R, resolution);
  std::vector<double> xs(N), ys(N);
  // distinct offsets in x and y keep samples off both diagonals
  for (int i = 0; i < N; ++i) {
    xs[i] = (i + 0.5 + 0.13) * pi / N;
    ys[i] = (i + 0.5 - 0.21) * pi / N;
  }
  const NodalGrid g = sample_function(quotient, xs, ys);
  const ContourSet contours = extract_contours(g, quotient);
  rep.closed_curves = contours.closed_count();
  rep.closed_curves_from_domains = label_domains(g).count - 1;

  rep.summary = summarize(f, resolution);
  rep.summary.closed_curve_count = rep.closed_curves;

  if (R % 2 == 0) {
    const int r = R / 2;
    rep.expected_closed_curves = r - 1;
    rep.expected_anti_diagonal = plus;
    rep.expected_diagonal = !plus;
    rep.expected_domain_count = 2 * r;
  } else {
    const int r = (R - 1) / 2;
    rep.expected_closed_curves = plus ? r : r - 1;
    rep.expected_diagonal = rep.expected_anti_diagonal = !plus;
    rep.expected_domain_count = plus ? r + 1 : 4 * r;
  }
  return rep;
}

}  // namespace

ZStructureReport verify_z_structure(int R, int resolution) {
  if (R < 2) throw std::invalid_argument("verify_z_structure: R must be >= 2");
  const int res = resolution > 0 ? resolution : default_resolution(1, R);
  ZStructureReport rep;
  rep.R = R;
  rep.plus = z_curves(R, true, res);
  rep.minus = z_curves(R, false, res);
  if (R % 2 == 0) {
    const auto cat = build_catalog(R);
    const ThetaFamily zp(1, R, pi / 4);
    bool ok = true;
    for (int j = 1; j <= R / 2 - 1; ++j) {
      const double a = cat.p[j + 1], b = pi - cat.p[j + 1];
      const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
      constexpr int K = 2001;
      for (int k = 0; k < K; ++k) {
        const double x = a + (b - a) * (k + 0.5) / K;
        if (!(sgn * eval(zp, x, cat.mid[j]) > 0.0)) ok = false;
      }
    }
    rep.median_sign_claim = ok;
  }
  return rep;
}

// ---- desingularization ----

std::string to_string(Opening o) {
  switch (o) {
    case Opening::Horizontal: return "horizontal";
    case Opening::Vertical: return "vertical";
    case Opening::Undetermined: return "undetermined";
  }
  return "?";
}

DesingularizationReport desingularization_check(int R, double theta) {
  if (R < 3) throw std::invalid_argument("desingularization_check: R must be >= 3");
  DesingularizationReport rep;
  rep.R = R;
  rep.theta = canonical_theta(theta);
  rep.critical_theta = (R % 2 == 0) ? pi / 4 : 3 * pi / 4;
  if (dist_mod_pi(rep.theta, rep.critical_theta) < kInteriorThetaTol)
    throw std::invalid_argument("desingularization_check: theta sits on the critical value");
  const auto cat = build_catalog(R);
  const auto boundary = boundary_critical_zeroes(ThetaFamily(1, R, rep.theta));
  const int nq = static_cast<int>(cat.q.size());
  for (int i = 1; i <= nq; ++i)
    for (int j = 1; j <= nq; ++j) {
      if (dist_mod_pi(theta_interior(cat, i, j), rep.critical_theta) >= kInteriorThetaTol) continue;
      Opening o = Opening::Undetermined;
      const auto p = classify_q_pattern(cat, boundary, rep.theta, i, j).pattern;
      if (p == PatternKind::InnerB) o = Opening::Horizontal;
      else if (p == PatternKind::InnerA) o = Opening::Vertical;
      rep.squares.push_back({{i, j}, o});
    }
  rep.all_agree = !rep.squares.empty();
  for (const auto& [sq, o] : rep.squares)
    if (o == Opening::Undetermined || o != rep.squares.front().second) rep.all_agree = false;
  if (rep.all_agree) rep.direction = rep.squares.front().second;
  return rep;
}

// ---- sweep ----

int SweepReport::anomalies() const {
  return static_cast<int>(std::count_if(samples.begin(), samples.end(), [](const SweepSample& s) { return s.anomaly; }));
}

std::set<int> SweepReport::counts() const {
  std::set<int> out;
  for (const auto& s : samples) out.insert(s.domain_count);
  return out;
}

int SweepReport::max_count() const {
  int best = 0;
  for (const auto& s : samples) best = std::max(best, s.domain_count);
  return best;
}

namespace {

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v)
    if (out.empty() || x - out.back() > 1e-12) out.push_back(x);
  v = std::move(out);
}

SweepSample evaluate_sample(int m, int n, double theta, int resolution) {
  SweepSample s;
  s.theta = theta;
  const ThetaFamily f(m, n, theta);
  if (f.is_trivial()) return s;
  s.domain_count = count_nodal_domains(f, resolution);
  for (const auto& z : critical_inventory(f)) {
    if (z.locus == Locus::Interior) ++s.n_interior_cz;
    if (z.locus == Locus::Edge) ++s.n_edge_cz;
    if (z.degenerate) ++s.n_degenerate;
  }
  return s;
}

}  // namespace

SweepReport sweep(int m, int n, const SweepOptions& options) {
  if (m < 1 || n < 1) throw std::invalid_argument("sweep: mode indices must be >= 1");
  SweepReport rep;
  rep.m = m;
  rep.n = n;
  const int res = options.resolution > 0 ? options.resolution : default_resolution(m, n);
  const double lo = options.lo, hi = options.hi;
  if (!(lo >= 0.0 && hi <= pi && lo < hi)) throw std::invalid_argument("sweep: range must satisfy 0 <= a < b <= pi");

  std::vector<SweepSample> plan;
  if (!options.thetas.empty()) {
    for (double t : options.thetas) {
      SweepSample s;
      s.theta = canonical_theta(t);
      s.is_breakpoint = true;
      plan.push_back(s);
    }
    rep.breakpoints = options.thetas;
  } else {
    std::vector<double> bps = options.breakpoints;
    if (bps.empty()) {
      bps = {0.0, pi / 4, pi / 2, 3 * pi / 4};
      const int big = std::max(m, n);
      if (std::min(m, n) == 1 && big >= 3) {
        for (double t : build_theta_catalog(big).all()) bps.push_back(m == 1 ? t : canonical_theta(pi / 2 - t));
      }
    }
    std::vector<double> kept{lo};
    for (double t : bps)
      if (t >= lo && t <= hi) kept.push_back(t);
    if (hi < pi) kept.push_back(hi);
    sort_unique(kept);
    rep.breakpoints = kept;
    const int k = std::max(0, options.samples_per_interval);
    for (std::size_t b = 0; b < kept.size(); ++b) {
      SweepSample s;
      s.theta = kept[b];
      s.is_breakpoint = true;
      plan.push_back(s);
      const double a = kept[b];
      const double e = (b + 1 < kept.size()) ? kept[b + 1] : hi;
      if (e - a <= 1e-12) continue;
      for (int q = 1; q <= k; ++q) {
        SweepSample t;
        t.theta = a + (e - a) * q / (k + 1);
        t.interval = static_cast<int>(b);
        plan.push_back(t);
      }
    }
  }

  const unsigned workers = options.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  rep.samples.resize(plan.size());
  for (std::size_t start = 0; start < plan.size(); start += workers) {
    const std::size_t end = std::min(plan.size(), start + workers);
    std::vector<std::future<SweepSample>> jobs;
    for (std::size_t i = start; i < end; ++i)
      jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, evaluate_sample, m, n,
                                plan[i].theta, res));
    for (std::size_t i = start; i < end; ++i) {
      SweepSample s = jobs[i - start].get();
      s.is_breakpoint = plan[i].is_breakpoint;
      s.interval = plan[i].interval;
      rep.samples[i] = s;
    }
  }
  std::stable_sort(rep.samples.begin(), rep.samples.end(),
                   [](const SweepSample& a, const SweepSample& b) { return a.theta < b.theta; });

  // Topology must not move inside an open interval, and interior critical
  // zeroes must not show up there.
  std::map<int, std::set<int>> per_interval;
  for (const auto& s : rep.samples)
    if (s.interval >= 0) per_interval[s.interval].insert(s.domain_count);
  for (auto& s : rep.samples) {
    if (s.interval < 0) continue;
    if (per_interval[s.interval].size() > 1 || s.n_interior_cz > 0) s.anomaly = true;
  }
  return rep;
}

// ---- Courant-sharp pipeline ----

PleijelReport pleijel_pipeline(int resolution) {
  PleijelReport rep;
  rep.candidates = courant_sharp_candidates();
  const auto spectrum = enumerate_spectrum(68.0);
  for (int k : rep.candidates) {
    const auto& entry = spectrum.at(k - 1);
    if (entry.modes.size() != 1)
      throw std::logic_error("pleijel_pipeline: eigenspaces spanned by several mode pairs are not handled");
    PleijelCase pc;
    pc.k = k;
    pc.eigenvalue = entry.eigenvalue;
    pc.mode = entry.modes.front();
    const int m = pc.mode.m, n = pc.mode.n;
    const int res = resolution > 0 ? resolution : default_resolution(m, n);
    if (m == n) {
      pc.counts.insert(count_nodal_domains(m, n, 0.0, res));
    } else {
      SweepOptions opt;
      opt.resolution = res;
      pc.counts = sweep(m, n, opt).counts();
    }
    pc.max_count = *pc.counts.rbegin();
    pc.courant_sharp = pc.max_count == k;
    if (pc.courant_sharp) rep.courant_sharp.insert(k);
    rep.cases.push_back(pc);
  }
  return rep;
}

}  // namespace nodal
