#ifndef BARRIER_GREENS_HPP
#define BARRIER_GREENS_HPP

#include <functional>

#include "barrier/core.hpp"
#include "barrier/eigenfunctions.hpp"
#include "barrier/test_space.hpp"

namespace barrier {

enum class GreenRegion { left_half, first_quadrant, fourth_quadrant, unified_k };

struct GreenEvaluation {
  double x = 0.0;
  double x_prime = 0.0;
  complex e_or_k;
  complex value;
  GreenRegion region = GreenRegion::unified_k;
};

// Resolvent kernel of H at complex energy e, dispatched by region.
// Throws OnCut for real e >= 0.
GreenEvaluation green(const PhysicalConfig& cfg, double x, double x_prime,
                      complex e);

// Unified wavenumber form, valid for all complex k with T(k) != 0.
GreenEvaluation green_k(const PhysicalConfig& cfg, double x, double x_prime,
                        complex k);

// Kernel G(x, x'; e) as a reusable callable; the eigensolution tables are
// built once, so repeated evaluation is cheap.
std::function<complex(double, double)> green_kernel(const PhysicalConfig& cfg,
                                                    complex e);

// Kernel of (z - Q)^{-1}: a multiple of delta(x - x'). Numerics only ever
// use the applied form.
struct QResolventKernel {
  complex scalar;  // 1/(z - x)
  bool delta = true;
};
QResolventKernel resolvent_q_kernel(double x, double x_prime, complex z);
complex apply_q_resolvent(const std::function<complex(double)>& phi, double x,
                          complex z);

// Kernel of (p - P)^{-1}; one-sided exponential depending on Im(p).
complex resolvent_p_kernel(const PhysicalConfig& cfg, double x, double x_prime,
                           complex p);

// Max over the 7-point probe grid of |int G(x,x';e) [(e-h)phi](x') dx' - phi(x)|.
double verify_resolvent(const PhysicalConfig& cfg, const TestFunction& phi,
                        complex e);

// (e - H) phi at x from the analytic descriptor; used by resolvent checks.
complex apply_e_minus_h(const PhysicalConfig& cfg, const WaveFunction& phi,
                        complex e, double x);

// G(e) applied to a callable by adaptive quadrature over [lo, hi].
complex apply_green(const PhysicalConfig& cfg, complex e,
                    const std::function<complex(double)>& f, double x,
                    double lo, double hi, double abs_tol = 1e-9,
                    double rel_tol = 1e-8);

}  // namespace barrier

#endif
