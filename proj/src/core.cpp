#include "barrier/core.hpp"

#include <cmath>
#include <stdexcept>

namespace barrier {

void PhysicalConfig::validate() const {
  if (!(b > a)) throw std::invalid_argument("PhysicalConfig: require b > a");
  if (!(v0 >= 0.0)) throw std::invalid_argument("PhysicalConfig: require v0 >= 0");
  if (!(m > 0.0)) throw std::invalid_argument("PhysicalConfig: require m > 0");
  if (!(hbar > 0.0)) throw std::invalid_argument("PhysicalConfig: require hbar > 0");
}

complex branch_sqrt(complex z) {
  const double r = std::abs(z);
  if (r == 0.0) return {0.0, 0.0};
  double th = std::atan2(std::imag(z), std::real(z));
  // atan2 gives -pi for (negative real, -0.0 imag); the convention here is
  // arg in (-pi, pi], so the cut itself belongs to the upper edge.
  if (th <= -pi) th = pi;
  const double sr = std::sqrt(r);
  const double half = 0.5 * th;
  return {sr * std::cos(half), sr * std::sin(half)};
}

EnergyPoint energy_point(const PhysicalConfig& cfg, complex e) {
  const double s = 2.0 * cfg.m / (cfg.hbar * cfg.hbar);
  EnergyPoint ep;
  ep.e = e;
  ep.k = branch_sqrt(s * e);
  ep.q = branch_sqrt(s * (e - cfg.v0));
  ep.k_tilde = branch_sqrt(-s * e);
  ep.q_tilde = branch_sqrt(-s * (e - cfg.v0));
  return ep;
}

EnergyPoint energy_point_from_k(const PhysicalConfig& cfg, complex k) {
  const double s = 2.0 * cfg.m / (cfg.hbar * cfg.hbar);
  EnergyPoint ep;
  ep.e = k * k / s;
  ep.k = k;
  // q as an even function of k, so continuing k -> -k leaves q alone.
  ep.q = branch_sqrt(k * k - complex(s * cfg.v0, 0.0));
  ep.k_tilde = branch_sqrt(-s * ep.e);
  ep.q_tilde = branch_sqrt(-s * (ep.e - cfg.v0));
  return ep;
}

}  // namespace barrier
