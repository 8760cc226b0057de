#include "barrier/greens.hpp"

#include <cmath>
#include <memory>

#include "barrier/coefficients.hpp"
#include "barrier/errors.hpp"
#include "barrier/quadrature.hpp"

namespace barrier {

namespace {
const complex I(0.0, 1.0);

struct GreenCore {
  ChiEvaluator ev;
  complex scale;  // multiplies chi_r(x<) * chi_l(x>)

  complex eval(double x, double xp) const {
    const double xlo = std::min(x, xp), xhi = std::max(x, xp);
    return scale * ev.value(Side::right, xlo) * ev.value(Side::left, xhi);
  }
};

GreenCore green_core(const PhysicalConfig& cfg, complex e,
                     GreenRegion region) {
  const EnergyPoint ep = energy_point(cfg, e);
  switch (region) {
    case GreenRegion::left_half: {
      ChiEvaluator ev(cfg, ChiFamily::tilde, ep);
      return {ev, -2.0 * pi / ev.coefficients().t};
    }
    case GreenRegion::first_quadrant: {
      ChiEvaluator ev(cfg, ChiFamily::plus, ep);
      return {ev, (2.0 * pi / I) / ev.coefficients().t};
    }
    default: {  // fourth quadrant
      ChiEvaluator ev(cfg, ChiFamily::minus, ep);
      return {ev, -(2.0 * pi / I) / ev.coefficients().t};
    }
  }
}

GreenRegion classify(complex e) {
  if (std::real(e) < 0.0) return GreenRegion::left_half;
  return std::imag(e) > 0.0 ? GreenRegion::first_quadrant
                            : GreenRegion::fourth_quadrant;
}

}  // namespace

GreenEvaluation green(const PhysicalConfig& cfg, double x, double x_prime,
                      complex e) {
  if (std::imag(e) == 0.0 && std::real(e) >= 0.0)
    throw OnCut("green: e on the continuous spectrum; use green_k");
  const GreenRegion region = classify(e);
  const GreenCore core = green_core(cfg, e, region);
  return {x, x_prime, e, core.eval(x, x_prime), region};
}

GreenEvaluation green_k(const PhysicalConfig& cfg, double x, double x_prime,
                        complex k) {
  const EnergyPoint ep = energy_point_from_k(cfg, k);
  ChiEvaluator ev(cfg, ChiFamily::plus, ep);
  const complex t = ev.coefficients().t;
  if (std::abs(t) < 1e-14)
    throw TransmissionZero("green_k: |T(k)| below 1e-14");
  const double xlo = std::min(x, x_prime), xhi = std::max(x, x_prime);
  const complex value =
      (2.0 * pi / I) * ev.value(Side::right, xlo) * ev.value(Side::left, xhi) / t;
  return {x, x_prime, k, value, GreenRegion::unified_k};
}

std::function<complex(double, double)> green_kernel(const PhysicalConfig& cfg,
                                                    complex e) {
  if (std::imag(e) == 0.0 && std::real(e) >= 0.0)
    throw OnCut("green_kernel: e on the continuous spectrum");
  auto core = std::make_shared<GreenCore>(green_core(cfg, e, classify(e)));
  return [core](double x, double xp) { return core->eval(x, xp); };
}

QResolventKernel resolvent_q_kernel(double x, double /*x_prime*/, complex z) {
  return {1.0 / (z - x), true};
}

complex apply_q_resolvent(const std::function<complex(double)>& phi, double x,
                          complex z) {
  return phi(x) / (z - x);
}

complex resolvent_p_kernel(const PhysicalConfig& cfg, double x, double x_prime,
                           complex p) {
  const double d = x - x_prime;
  const complex kern = std::exp(I * p * d / cfg.hbar) / (I * cfg.hbar);
  if (std::imag(p) > 0.0) return d > 0.0 ? kern : complex(0.0);
  return d < 0.0 ? -kern : complex(0.0);
}

complex apply_e_minus_h(const PhysicalConfig& cfg, const WaveFunction& phi,
                        complex e, double x) {
  const Jet j = phi.jet(x, 2);
  const complex hphi = -cfg.hbar * cfg.hbar / (2.0 * cfg.m) * j.derivative(2) +
                       cfg.potential(x) * j.value();
  return e * j.value() - hphi;
}

complex apply_green(const PhysicalConfig& cfg, complex e,
                    const std::function<complex(double)>& f, double x,
                    double lo, double hi, double abs_tol, double rel_tol) {
  const GreenRegion region = classify(e);
  const GreenCore core = green_core(cfg, e, region);
  auto integrand = [&](double xp) { return core.eval(x, xp) * f(xp); };
  // split at the kernel kink and the potential edges
  return integrate_adaptive_split(integrand, lo, hi, {x, cfg.a, cfg.b},
                                  abs_tol, rel_tol);
}

double verify_resolvent(const PhysicalConfig& cfg, const TestFunction& phi,
                        complex e) {
  if (std::imag(e) == 0.0)
    throw OnCut("verify_resolvent: need Im(e) != 0");
  const double lo = std::min(phi.support_lo(), cfg.a - 1.0);
  const double hi = std::max(phi.support_hi(), cfg.b + 1.0);
  auto src = [&](double xp) { return apply_e_minus_h(cfg, phi, e, xp); };

  const double probes[7] = {cfg.a - 1.5,          cfg.a - 0.05,
                            cfg.a + 0.05,         0.5 * (cfg.a + cfg.b),
                            cfg.b - 0.05,         cfg.b + 0.05,
                            cfg.b + 1.5};
  double worst = 0.0;
  for (double x : probes) {
    const complex rec = apply_green(cfg, e, src, x, lo, hi);
    worst = std::max(worst, std::abs(rec - phi.value(x)));
  }
  return worst;
}

}  // namespace barrier
