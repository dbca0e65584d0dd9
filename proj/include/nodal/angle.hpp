#pragma once

#include <numbers>
#include <string>

namespace nodal {

inline constexpr double pi = std::numbers::pi;

// Representative of theta modulo pi in [0, pi).
double canonical_theta(double theta);

// Distance between two angles taken modulo pi.
double dist_mod_pi(double a, double b);

// "<decimal>" (radians) or "<decimal>pi". Throws std::invalid_argument.
double parse_angle(const std::string& text);
// parse_angle folded into [0, pi)
double parse_theta(const std::string& text);

// theta / pi rounded to 12 significant digits.
double theta_over_pi(double theta);

// e.g. "0.25pi"
std::string format_theta(double theta);

}  // namespace nodal
