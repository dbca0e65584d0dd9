#pragma once

#include <string>
#include <vector>

#include "nodal/chebyshev.hpp"
#include "nodal/critical_zeroes.hpp"
#include "nodal/grid.hpp"
#include "nodal/nodal_topology.hpp"
#include "nodal/spectrum.hpp"

namespace nodal {

inline constexpr int kSchemaVersion = 1;

struct RenderSpec {
  int width = 600;
  int height = 600;
  bool show_checkerboard = true;
  bool show_lattice = true;
  bool show_critical_zeroes = true;
  bool math_axes = false;  // y up instead of the default y down
  std::string theta_label;  // defaults to theta as a multiple of pi
};

std::string render_nodal_svg(const NodalSummary& summary, const NodalGrid& grid, const RenderSpec& spec);

std::string spectrum_csv(const std::vector<SpectrumEntry>& entries);
std::string spectrum_json(const std::vector<SpectrumEntry>& entries);
std::string spectrum_text(const std::vector<SpectrumEntry>& entries);

std::string theta_catalog_json(const ChebyshevCatalog& cat, const SpecialThetaCatalog& th);
std::string theta_catalog_text(const ChebyshevCatalog& cat, const SpecialThetaCatalog& th);

std::string critical_json(int m, int n, double theta, const std::vector<CriticalZero>& zeroes);
std::string critical_text(const std::vector<CriticalZero>& zeroes);

std::string summary_json(const NodalSummary& s);
std::string summary_text(const NodalSummary& s);

// theta_over_pi, domain_count, n_interior_cz, n_edge_cz, anomaly_flag
std::string sweep_csv(const SweepReport& rep);
std::string sweep_json(const SweepReport& rep);

// Write to a sibling temporary file and rename over the target.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace nodal
