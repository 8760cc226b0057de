#ifndef BARRIER_CORE_HPP
#define BARRIER_CORE_HPP

#include <complex>

namespace barrier {

using complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// Barrier geometry and physical constants. V(x) = v0 on [a,b], 0 elsewhere.
struct PhysicalConfig {
  double m = 1.0;
  double hbar = 1.0;
  double v0 = 10.0;
  double a = 0.0;
  double b = 1.0;

  void validate() const;  // throws std::invalid_argument
  double width() const { return b - a; }
  double potential(double x) const { return (x >= a && x <= b) ? v0 : 0.0; }
};

// Square root with arg(w) in (-pi/2, pi/2]: the negative real axis maps to
// the positive imaginary axis, and conj(branch_sqrt(conj z)) = branch_sqrt(z)
// away from the cut. Implemented from polar form; std::sqrt differs in the
// sign it assigns on the cut.
complex branch_sqrt(complex z);

// An energy together with every wavenumber the piecewise solutions use.
// k, q are the propagating exterior/interior wavenumbers; k_tilde, q_tilde
// the decaying ones (k_tilde = -i*k holds under this branch).
struct EnergyPoint {
  complex e;
  complex k;
  complex q;
  complex k_tilde;
  complex q_tilde;
};

EnergyPoint energy_point(const PhysicalConfig& cfg, complex e);

// Build the point from a wavenumber instead (E = hbar^2 k^2 / 2m). The k
// field keeps the given k verbatim, so k < 0 probes the second channel.
EnergyPoint energy_point_from_k(const PhysicalConfig& cfg, complex k);

}  // namespace barrier

#endif
