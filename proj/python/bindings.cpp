#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nodal/cli.hpp"
#include "nodal/nodal_topology.hpp"
#include "nodal/render.hpp"

namespace py = pybind11;
using namespace nodal;

namespace {

py::dict zero_dict(const CriticalZero& z) {
  py::dict d;
  d["x"] = z.x;
  d["y"] = z.y;
  d["locus"] = to_string(z.locus);
  d["edge"] = to_string(z.edge);
  d["order"] = z.order;
  d["degenerate"] = z.degenerate;
  return d;
}

py::tuple cli(const std::vector<std::string>& args) {
  std::vector<std::string> all{"squarenodal"};
  all.insert(all.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : all) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Nodal sets of Dirichlet eigenfunctions on the square";

  m.def("parse_theta", &parse_theta, py::arg("text"));

  m.def(
      "spectrum",
      [](double lambda_max) {
        py::list out;
        for (const auto& e : enumerate_spectrum(lambda_max)) {
          py::list modes;
          for (const auto& md : e.modes) modes.append(py::make_tuple(md.m, md.n));
          py::dict d;
          d["k"] = e.k;
          d["eigenvalue"] = e.eigenvalue;
          d["multiplicity"] = e.multiplicity;
          d["modes"] = modes;
          out.append(d);
        }
        return out;
      },
      py::arg("lambda_max"));
  m.def("courant_sharp_candidates", [](double bound) { return courant_sharp_candidates(bound); },
        py::arg("lambda_bound") = 68.0);

  m.def(
      "special_theta",
      [](int R) {
        const auto cat = build_catalog(R);
        const auto th = build_theta_catalog(cat);
        py::dict d;
        d["q"] = cat.q;
        d["theta_minus"] = cat.theta_minus;
        d["T_o"] = th.T_o;
        d["T_x"] = th.T_x;
        d["T_y"] = th.T_y;
        return d;
      },
      py::arg("R"));

  m.def("eval", [](int mm, int n, double theta, double x, double y) { return eval(ThetaFamily(mm, n, theta), x, y); },
        py::arg("m"), py::arg("n"), py::arg("theta"), py::arg("x"), py::arg("y"));
  m.def("grad", [](int mm, int n, double theta, double x, double y) { return grad(ThetaFamily(mm, n, theta), x, y); },
        py::arg("m"), py::arg("n"), py::arg("theta"), py::arg("x"), py::arg("y"));

  m.def(
      "critical_zeroes",
      [](int mm, int n, double theta) {
        py::list out;
        for (const auto& z : critical_inventory(ThetaFamily(mm, n, theta))) out.append(zero_dict(z));
        return out;
      },
      py::arg("m"), py::arg("n"), py::arg("theta"));

  m.def("count_nodal_domains", py::overload_cast<int, int, double, int>(&count_nodal_domains), py::arg("m"),
        py::arg("n"), py::arg("theta"), py::arg("resolution") = 0);

  m.def(
      "summary_json",
      [](int mm, int n, double theta, int resolution) { return summary_json(summarize(ThetaFamily(mm, n, theta), resolution)); },
      py::arg("m"), py::arg("n"), py::arg("theta"), py::arg("resolution") = 0);

  m.def(
      "render_svg",
      [](int mm, int n, double theta, int resolution, bool math_axes) {
        const ThetaFamily f(mm, n, theta);
        const auto s = summarize(f, resolution);
        RenderSpec spec;
        spec.math_axes = math_axes;
        return render_nodal_svg(s, sample_grid(f, s.resolution, false), spec);
      },
      py::arg("m"), py::arg("n"), py::arg("theta"), py::arg("resolution") = 0, py::arg("math_axes") = false);

  m.def(
      "sweep",
      [](int mm, int n, double lo, double hi, int samples, int resolution) {
        SweepOptions o;
        o.lo = lo;
        o.hi = hi;
        o.samples_per_interval = samples;
        o.resolution = resolution;
        py::list out;
        for (const auto& s : sweep(mm, n, o).samples) {
          py::dict d;
          d["theta"] = s.theta;
          d["breakpoint"] = s.is_breakpoint;
          d["domain_count"] = s.domain_count;
          d["n_interior_cz"] = s.n_interior_cz;
          d["n_edge_cz"] = s.n_edge_cz;
          d["anomaly"] = s.anomaly;
          out.append(d);
        }
        return out;
      },
      py::arg("m"), py::arg("n"), py::arg("lo") = 0.0, py::arg("hi") = pi, py::arg("samples_per_interval") = 1,
      py::arg("resolution") = 0);

  m.def(
      "courant_sharp",
      [](int resolution) { return pleijel_pipeline(resolution).courant_sharp; }, py::arg("resolution") = 0);

  m.def("run_cli", &cli, py::arg("args"), "Run the command-line tool; returns (exit_code, stdout, stderr).");
}
