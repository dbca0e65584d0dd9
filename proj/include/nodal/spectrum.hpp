#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace nodal {

// A Dirichlet mode of the square [0,pi]^2: sin(m x) sin(n y), eigenvalue m^2 + n^2.
struct Mode {
  int m = 1;
  int n = 1;

  friend bool operator==(const Mode&, const Mode&) = default;
  friend auto operator<=>(const Mode&, const Mode&) = default;
};

// One rank of the ordered spectrum. Modes are the unordered pairs {m,n}
// (stored with m <= n) whose eigenvalue equals `eigenvalue`; every rank
// inside a cluster carries the same list.
struct SpectrumEntry {
  int k = 1;
  std::int64_t eigenvalue = 2;
  int multiplicity = 1;
  std::vector<Mode> modes;
};

struct CourantAudit {
  int k = 1;
  std::int64_t eigenvalue = 2;
  bool is_first_of_cluster = true;
  double pleijel_bound = 0.0;
  bool faber_krahn_pass = true;
  bool candidate = false;
};

// Number of ordered pairs (m,n), m,n >= 1, with m^2 + n^2 == value.
int multiplicity_of(std::int64_t value);

std::vector<SpectrumEntry> enumerate_spectrum(double lambda_max);

// Strict counting function #{k : lambda_k < lambda}.
int counting_function(double lambda);

// Smallest rank k with lambda_k == m^2 + n^2.
int first_index_of(const Mode& mode);

double pleijel_lower_bound(double lambda);

// First positive zero of J0, by bisection of the ascending series on [2, 2.5].
double bessel_j0(double x);
double bessel_j0_first_zero();

// pi / j01^2
double faber_krahn_constant();

bool faber_krahn_pass(int k, double lambda);

std::vector<CourantAudit> courant_audit(double lambda_bound = 68.0);

std::set<int> courant_sharp_candidates(double lambda_bound = 68.0);

}  // namespace nodal
