#pragma once

#include <string>
#include <vector>

namespace nodal {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Published six-decimal values (in units of pi) for R = 8 and R = 9.
struct ReferenceCatalog {
  int R;
  std::vector<double> q;
  std::vector<double> T_o;
  std::vector<double> T_x;
  std::vector<double> T_y;
};

const std::vector<ReferenceCatalog>& reference_catalogs();

// Suites: "catalog", "pleijel", "stern", "z", or "all".
std::vector<CheckResult> run_suite(const std::string& suite, int resolution = 0);

bool is_known_suite(const std::string& suite);

}  // namespace nodal
