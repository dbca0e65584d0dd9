#include "nodal/angle.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nodal {

double canonical_theta(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
  double t = std::fmod(theta, pi);
  if (t < 0.0) t += pi;
  if (t >= pi) t -= pi;
  return t;
}

double dist_mod_pi(double a, double b) {
  const double d = canonical_theta(a - b);
  return std::min(d, pi - d);
}

double parse_angle(const std::string& text) {
  std::string body = text;
  bool times_pi = false;
  if (body.size() >= 2 && body.compare(body.size() - 2, 2, "pi") == 0) {
    times_pi = true;
    body.resize(body.size() - 2);
    if (body.empty() || body == "+" || body == "-") body += "1";
  }
  if (body.empty()) throw std::invalid_argument("empty angle");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(body, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse angle '" + text + "'");
  }
  if (used != body.size() || !std::isfinite(v))
    throw std::invalid_argument("cannot parse angle '" + text + "'");
  return times_pi ? v * pi : v;
}

double parse_theta(const std::string& text) { return canonical_theta(parse_angle(text)); }

double theta_over_pi(double theta) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", theta / pi);
  double v = std::stod(buf);
  return v == 0.0 ? 0.0 : v;  // no negative zero
}

std::string format_theta(double theta) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12gpi", theta_over_pi(theta));
  return buf;
}

}  // namespace nodal
