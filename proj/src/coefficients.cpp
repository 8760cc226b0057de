#include "barrier/coefficients.hpp"

#include <cmath>

#include "barrier/errors.hpp"

namespace barrier {

namespace {
const complex I(0.0, 1.0);
}

CoefficientSet coefficients_at(const PhysicalConfig& cfg, complex k, complex q,
                               Family tag) {
  if (std::abs(k) < 1e-12)
    throw ZeroWavenumber("coefficients: |k| below 1e-12, amplitudes undefined");

  const double a = cfg.a, b = cfg.b, L = cfg.b - cfg.a;
  CoefficientSet cs;
  cs.family = tag;
  cs.k = k;
  cs.q = q;

  const complex u = q / k;

  // Degenerate interior wavenumber: the denominator vanishes like q, so
  // divide it out analytically. dred = D/(2q) expanded to second order in
  // q^2; its truncation error ~(qL)^4 crosses the ~eps/(qL) cancellation
  // error of the direct formula near qL ~ 6e-4.
  if (std::abs(q) * L < 3e-4) {
    cs.degenerate = true;
    const complex q2 = q * q;
    const complex dred = I * L - 2.0 / k +
                         q2 * (-I * L * L * L / 6.0 + L * L / k + I * L / (k * k));
    const complex eikb = std::exp(-I * k * b);   // e^{-ikb}
    const complex eika = std::exp(I * k * a);    // e^{+ika}
    cs.t = std::exp(-I * k * L) * (-2.0 / k) / dred;
    const complex refl_num = I * L * (1.0 - q2 * (1.0 / (k * k) + L * L / 6.0));
    cs.r_r = std::exp(-2.0 * I * k * b) * refl_num / dred;
    cs.r_l = std::exp(2.0 * I * k * a) * refl_num / dred;
    cs.sum_r = -2.0 * eikb *
               (I * a + 1.0 / k - q2 * (I * a * a * a / 6.0 + a * a / (2.0 * k))) /
               dred;
    cs.qdiff_r = eikb * (2.0 - q2 * a * a + 2.0 * I * q2 * a / k) / dred;
    cs.sum_l = 2.0 * eika *
               (I * b - 1.0 / k - q2 * (I * b * b * b / 6.0 - b * b / (2.0 * k))) /
               dred;
    cs.qdiff_l = eika * (-2.0 + q2 * b * b + 2.0 * I * q2 * b / k) / dred;
    // Raw interior amplitudes diverge like 1/q here; still report them from
    // the same series so a/b stay consistent with sum/qdiff when q != 0.
    const complex d = 2.0 * q * dred;
    cs.a_r = 2.0 * eikb * std::exp(-I * q * a) * (1.0 - u) / d;
    cs.b_r = -2.0 * eikb * std::exp(I * q * a) * (1.0 + u) / d;
    cs.a_l = -2.0 * eika * std::exp(-I * q * b) * (1.0 + u) / d;
    cs.b_l = 2.0 * eika * std::exp(I * q * b) * (1.0 - u) / d;
    return cs;
  }

  const complex eiqL = std::exp(I * q * L);
  const complex emiqL = 1.0 / eiqL;
  const complex d = (1.0 - u) * (1.0 - u) * eiqL - (1.0 + u) * (1.0 + u) * emiqL;

  cs.t = std::exp(-I * k * L) * (-4.0 * u) / d;

  const complex eikb = std::exp(-I * k * b);
  cs.a_r = 2.0 * eikb * std::exp(-I * q * a) * (1.0 - u) / d;
  cs.b_r = -2.0 * eikb * std::exp(I * q * a) * (1.0 + u) / d;
  cs.r_r = std::exp(-2.0 * I * k * b) * (1.0 - u * u) * (eiqL - emiqL) / d;

  const complex eika = std::exp(I * k * a);
  cs.r_l = std::exp(2.0 * I * k * a) * (1.0 - u * u) * (eiqL - emiqL) / d;
  cs.a_l = -2.0 * eika * std::exp(-I * q * b) * (1.0 + u) / d;
  cs.b_l = 2.0 * eika * std::exp(I * q * b) * (1.0 - u) / d;

  cs.sum_r = cs.a_r + cs.b_r;
  cs.qdiff_r = q * (cs.a_r - cs.b_r);
  cs.sum_l = cs.a_l + cs.b_l;
  cs.qdiff_l = q * (cs.a_l - cs.b_l);
  return cs;
}

CoefficientSet plus_coefficients(const PhysicalConfig& cfg,
                                 const EnergyPoint& ep) {
  return coefficients_at(cfg, ep.k, ep.q, Family::plus);
}

// The starred closed forms coincide with the plus forms continued to
// (-k, -q); verified term by term against their printed expressions.
CoefficientSet star_coefficients(const PhysicalConfig& cfg,
                                 const EnergyPoint& ep) {
  return coefficients_at(cfg, -ep.k, -ep.q, Family::star);
}

// Likewise the tilde forms are the plus forms at (i*k_tilde, i*q_tilde).
CoefficientSet tilde_coefficients(const PhysicalConfig& cfg,
                                  const EnergyPoint& ep) {
  if (std::abs(ep.k_tilde) < 1e-12)
    throw ZeroWavenumber("tilde coefficients: |k_tilde| below 1e-12");
  return coefficients_at(cfg, complex(0, 1) * ep.k_tilde,
                         complex(0, 1) * ep.q_tilde, Family::tilde);
}

}  // namespace barrier
