#include "nodal/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace nodal {

int multiplicity_of(std::int64_t value) {
  int count = 0;
  for (std::int64_t m = 1; m * m < value; ++m) {
    const std::int64_t rest = value - m * m;
    const auto n = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
    if (n >= 1 && n * n == rest) ++count;
  }
  return count;
}

std::vector<SpectrumEntry> enumerate_spectrum(double lambda_max) {
  if (!(lambda_max >= 2.0)) throw std::invalid_argument("enumerate_spectrum: lambda_max must be >= 2");
  const auto vmax = static_cast<std::int64_t>(std::floor(lambda_max));

  std::map<std::int64_t, std::vector<Mode>> clusters;
  for (std::int64_t m = 1; 2 * m * m <= vmax; ++m) {
    for (std::int64_t n = m; m * m + n * n <= vmax; ++n) {
      clusters[m * m + n * n].push_back({static_cast<int>(m), static_cast<int>(n)});
    }
  }

  std::vector<SpectrumEntry> out;
  int k = 1;
  for (auto& [value, modes] : clusters) {
    std::sort(modes.begin(), modes.end());
    int mult = 0;
    for (const auto& md : modes) mult += (md.m == md.n) ? 1 : 2;
    for (int r = 0; r < mult; ++r) out.push_back({k++, value, mult, modes});
  }
  return out;
}

int counting_function(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("counting_function: lambda must be positive");
  if (lambda <= 2.0) return 0;
  // Strict count: every eigenvalue is an integer, so bound the enumeration
  // by the largest integer strictly below lambda.
  const double below = std::ceil(lambda) - 1.0;
  if (below < 2.0) return 0;
  return static_cast<int>(enumerate_spectrum(below).size());
}

int first_index_of(const Mode& mode) {
  if (mode.m < 1 || mode.n < 1) throw std::invalid_argument("first_index_of: mode indices must be >= 1");
  const double value = static_cast<double>(mode.m) * mode.m + static_cast<double>(mode.n) * mode.n;
  return counting_function(value) + 1;
}

double pleijel_lower_bound(double lambda) {
  return std::numbers::pi / 4.0 * lambda - 2.0 * std::sqrt(lambda) - 1.0;
}

double bessel_j0(double x) {
  // Ascending series sum_k (-1)^k (x^2/4)^k / (k!)^2; converges quickly for |x| <= 3.
  const double q = x * x / 4.0;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= -q / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double bessel_j0_first_zero() {
  double lo = 2.0, hi = 2.5;
  double flo = bessel_j0(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = bessel_j0(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double faber_krahn_constant() {
  static const double value = [] {
    const double j = bessel_j0_first_zero();
    return std::numbers::pi / (j * j);
  }();
  return value;
}

bool faber_krahn_pass(int k, double lambda) {
  if (k < 1 || !(lambda > 0.0)) throw std::invalid_argument("faber_krahn_pass: need k >= 1 and lambda > 0");
  return static_cast<double>(k) / lambda <= faber_krahn_constant();
}

std::vector<CourantAudit> courant_audit(double lambda_bound) {
  // Enumerate one cluster past the bound so the last entry's cluster status is known.
  const auto spectrum = enumerate_spectrum(std::max(2.0, lambda_bound));
  std::vector<CourantAudit> out;
  out.reserve(spectrum.size());
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const auto& e = spectrum[i];
    CourantAudit a;
    a.k = e.k;
    a.eigenvalue = e.eigenvalue;
    a.is_first_of_cluster = (i == 0) || spectrum[i - 1].eigenvalue < e.eigenvalue;
    a.pleijel_bound = pleijel_lower_bound(static_cast<double>(e.eigenvalue));
    a.faber_krahn_pass = faber_krahn_pass(e.k, static_cast<double>(e.eigenvalue));
    a.candidate = a.is_first_of_cluster && a.faber_krahn_pass &&
                  static_cast<double>(e.eigenvalue) <= std::min(lambda_bound, 68.0);
    out.push_back(a);
  }
  return out;
}

std::set<int> courant_sharp_candidates(double lambda_bound) {
  std::set<int> out;
  for (const auto& a : courant_audit(lambda_bound))
    if (a.candidate) out.insert(a.k);
  return out;
}

}  // namespace nodal
