#include "nodal/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nodal/angle.hpp"
#include "nodal/nodal_topology.hpp"
#include "nodal/render.hpp"
#include "nodal/verify.hpp"

namespace nodal {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<double, double> parse_range(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--range expects a,b");
  const double a = parse_angle(text.substr(0, comma));
  const double b = parse_angle(text.substr(comma + 1));
  if (!(a >= 0.0 && b <= pi + 1e-15 && a < b)) throw UsageError("--range needs 0 <= a < b <= pi");
  return {a, std::min(b, pi)};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nodal sets of Dirichlet eigenfunctions on the square [0,pi]^2", "squarenodal"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  // spectrum
  double lambda_max = 73.0;
  bool spec_json = false, spec_csv = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Enumerate eigenvalues m^2 + n^2 up to a bound");
  spectrum_cmd->add_option("--max", lambda_max, "Largest eigenvalue")->check(CLI::Range(2.0, 1e7));
  auto* sj = spectrum_cmd->add_flag("--json", spec_json, "JSON output");
  spectrum_cmd->add_flag("--csv", spec_csv, "CSV output")->excludes(sj);

  // special-theta
  int cat_R = 8;
  bool cat_json = false;
  auto* theta_cmd = app.add_subcommand("special-theta", "Extremum angles and special theta values for (1,R)");
  theta_cmd->add_option("--R", cat_R, "R >= 3")->required()->check(CLI::Range(3, 4096));
  theta_cmd->add_flag("--json", cat_json, "JSON output");

  // critical
  int cm = 1, cn = 2;
  std::string ctheta;
  bool crit_json = false;
  auto* crit_cmd = app.add_subcommand("critical", "Critical zeroes of Phi^theta_{m,n}");
  crit_cmd->add_option("--m", cm)->required()->check(CLI::PositiveNumber);
  crit_cmd->add_option("--n", cn)->required()->check(CLI::PositiveNumber);
  crit_cmd->add_option("--theta", ctheta, "radians, or e.g. 0.25pi")->required();
  crit_cmd->add_flag("--json", crit_json, "JSON output");

  // nodal
  int nm = 1, nn = 2, grid = 0;
  std::string ntheta, svg_path;
  bool nodal_json = false, math_axes = false, no_checker = false, no_lattice = false;
  auto* nodal_cmd = app.add_subcommand("nodal", "Nodal domains and summary of Phi^theta_{m,n}");
  nodal_cmd->add_option("--m", nm)->required()->check(CLI::PositiveNumber);
  nodal_cmd->add_option("--n", nn)->required()->check(CLI::PositiveNumber);
  nodal_cmd->add_option("--theta", ntheta, "radians, or e.g. 0.25pi")->required();
  nodal_cmd->add_option("--grid", grid, "Samples per side (default 64 max(m,n))")->check(CLI::PositiveNumber);
  nodal_cmd->add_option("--svg", svg_path, "Write an SVG drawing");
  nodal_cmd->add_flag("--json", nodal_json, "JSON output");
  nodal_cmd->add_flag("--math-axes", math_axes, "Draw with y pointing up");
  nodal_cmd->add_flag("--no-checkerboard", no_checker, "Do not shade grey squares");
  nodal_cmd->add_flag("--no-lattice", no_lattice, "Do not draw lattice points");

  // sweep
  int sm = 1, sn = 3, sgrid = 0, per_interval = 1;
  std::string range, csv_path;
  bool sweep_js = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Track nodal topology across theta");
  sweep_cmd->add_option("--m", sm)->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--n", sn)->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--range", range, "a,b with 0 <= a < b <= pi, e.g. 0,0.25pi");
  sweep_cmd->add_option("--samples", per_interval, "Samples per open interval")->check(CLI::Range(0, 1000));
  sweep_cmd->add_option("--grid", sgrid, "Samples per side")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--csv", csv_path, "Write CSV to a file");
  sweep_cmd->add_flag("--json", sweep_js, "JSON output");

  // verify
  std::string suite = "all";
  int vgrid = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in checks");
  verify_cmd->add_option("--suite", suite, "pleijel | stern | z | catalog | all")
      ->check(CLI::IsMember({"pleijel", "stern", "z", "catalog", "all"}));
  verify_cmd->add_option("--grid", vgrid, "Samples per side")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*spectrum_cmd) {
      const auto entries = enumerate_spectrum(lambda_max);
      out << (spec_json ? spectrum_json(entries) : spec_csv ? spectrum_csv(entries) : spectrum_text(entries));
      return 0;
    }
    if (*theta_cmd) {
      const auto cat = build_catalog(cat_R);
      const auto th = build_theta_catalog(cat);
      out << (cat_json ? theta_catalog_json(cat, th) : theta_catalog_text(cat, th));
      return 0;
    }
    if (*crit_cmd) {
      const double theta = parse_theta(ctheta);
      const auto zs = critical_inventory(ThetaFamily(cm, cn, theta));
      out << (crit_json ? critical_json(cm, cn, theta, zs) : critical_text(zs));
      return 0;
    }
    if (*nodal_cmd) {
      const ThetaFamily f(nm, nn, parse_theta(ntheta));
      const int res = grid > 0 ? grid : default_resolution(nm, nn);
      const auto s = summarize(f, res);
      if (!svg_path.empty()) {
        RenderSpec rs;
        rs.math_axes = math_axes;
        rs.show_checkerboard = !no_checker;
        rs.show_lattice = !no_lattice;
        write_file_atomic(svg_path, render_nodal_svg(s, sample_grid(f, res, false), rs));
      }
      out << (nodal_json ? summary_json(s) : summary_text(s));
      return s.courant_ok() ? 0 : 1;
    }
    if (*sweep_cmd) {
      SweepOptions opt;
      if (!range.empty()) std::tie(opt.lo, opt.hi) = parse_range(range);
      opt.samples_per_interval = per_interval;
      opt.resolution = sgrid;
      const auto rep = sweep(sm, sn, opt);
      if (!csv_path.empty()) write_file_atomic(csv_path, sweep_csv(rep));
      if (sweep_js) out << sweep_json(rep);
      else if (csv_path.empty()) out << sweep_csv(rep);
      return rep.anomalies() == 0 ? 0 : 1;
    }
    if (*verify_cmd) {
      bool ok = true;
      for (const auto& r : run_suite(suite, vgrid)) {
        out << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) out << "  [" << r.detail << "]";
        out << "\n";
        ok = ok && r.pass;
      }
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace nodal
