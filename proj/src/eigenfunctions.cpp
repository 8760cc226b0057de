#include "barrier/eigenfunctions.hpp"

#include <cmath>
#include <memory>

#include "barrier/errors.hpp"

namespace barrier {

namespace {
const complex I(0.0, 1.0);

// sin(q x)/q, stable through q = 0
complex sinc_q(complex q, double x) {
  const complex qx = q * x;
  if (std::abs(qx) < 1e-4) return x * (1.0 - qx * qx / 6.0);
  return std::sin(qx) / q;
}
}  // namespace

ChiEvaluator::ChiEvaluator(const PhysicalConfig& cfg, ChiFamily family,
                           const EnergyPoint& ep)
    : a_(cfg.a), b_(cfg.b) {
  complex k_pref;
  switch (family) {
    case ChiFamily::plus:
      keff_ = ep.k;
      qeff_ = ep.q;
      k_pref = ep.k;
      break;
    case ChiFamily::minus:
      // same closed forms continued to (-k, -q); the normalization keeps
      // the original k
      keff_ = -ep.k;
      qeff_ = -ep.q;
      k_pref = ep.k;
      break;
    case ChiFamily::tilde:
      keff_ = I * ep.k_tilde;
      qeff_ = I * ep.q_tilde;
      k_pref = ep.k_tilde;
      break;
  }
  pref_ = branch_sqrt(cfg.m / (2.0 * pi * k_pref * cfg.hbar * cfg.hbar));
  cs_ = coefficients_at(cfg, keff_, qeff_,
                        family == ChiFamily::tilde ? Family::tilde
                        : family == ChiFamily::minus ? Family::star
                                                     : Family::plus);
}

std::pair<complex, complex> ChiEvaluator::value_and_derivative(Side side,
                                                               double x) const {
  const int region = (x < a_) ? 0 : (x > b_) ? 2 : 1;
  return piece(side, region, x);
}

std::pair<complex, complex> ChiEvaluator::piece(Side side, int region,
                                                double x) const {
  const complex k = keff_, q = qeff_;
  complex v, d;
  if (region == 0) {
    if (side == Side::right) {
      const complex e = std::exp(-I * k * x);
      v = cs_.t * e;
      d = -I * k * cs_.t * e;
    } else {
      const complex ep_ = std::exp(I * k * x), em = std::exp(-I * k * x);
      v = ep_ + cs_.r_l * em;
      d = I * k * (ep_ - cs_.r_l * em);
    }
  } else if (region == 2) {
    if (side == Side::right) {
      const complex ep_ = std::exp(I * k * x), em = std::exp(-I * k * x);
      v = cs_.r_r * ep_ + em;
      d = I * k * (cs_.r_r * ep_ - em);
    } else {
      const complex e = std::exp(I * k * x);
      v = cs_.t * e;
      d = I * k * cs_.t * e;
    }
  } else {
    if (cs_.degenerate) {
      const complex s = (side == Side::right) ? cs_.sum_r : cs_.sum_l;
      const complex w = (side == Side::right) ? cs_.qdiff_r : cs_.qdiff_l;
      const complex c = std::cos(q * x), sn = std::sin(q * x);
      v = s * c + I * w * sinc_q(q, x);
      d = I * w * c - q * s * sn;
    } else {
      const complex A = (side == Side::right) ? cs_.a_r : cs_.a_l;
      const complex B = (side == Side::right) ? cs_.b_r : cs_.b_l;
      const complex ep_ = std::exp(I * q * x), em = std::exp(-I * q * x);
      v = A * ep_ + B * em;
      d = I * q * (A * ep_ - B * em);
    }
  }
  return {pref_ * v, pref_ * d};
}

complex ChiEvaluator::value(Side side, double x) const {
  return value_and_derivative(side, x).first;
}

complex ChiEvaluator::derivative(Side side, double x) const {
  return value_and_derivative(side, x).second;
}

complex chi(const PhysicalConfig& cfg, const EigenfunctionId& id, double x) {
  return ChiEvaluator(cfg, id.family, id.ep).value(id.side, x);
}

complex chi_derivative(const PhysicalConfig& cfg, const EigenfunctionId& id,
                       double x) {
  return ChiEvaluator(cfg, id.family, id.ep).derivative(id.side, x);
}

complex chi_tilde(const PhysicalConfig& cfg, Side side, const EnergyPoint& ep,
                  double x) {
  return ChiEvaluator(cfg, ChiFamily::tilde, ep).value(side, x);
}

complex plane_wave(const PhysicalConfig& cfg, double x, double p) {
  return std::exp(I * p * x / cfg.hbar) /
         std::sqrt(2.0 * pi * cfg.hbar);
}

complex k_normalized_chi(const PhysicalConfig& cfg, const EigenfunctionId& id,
                         double x) {
  const complex scale =
      branch_sqrt(cfg.hbar * cfg.hbar * id.ep.k / cfg.m);
  return scale * chi(cfg, id, x);
}

complex wronskian(const DifferentiableFn& f, const DifferentiableFn& g,
                  double x) {
  const auto [fv, fd] = f(x);
  const auto [gv, gd] = g(x);
  return fv * gd - fd * gv;
}

DifferentiableFn chi_fn(const PhysicalConfig& cfg, ChiFamily family, Side side,
                        const EnergyPoint& ep) {
  auto ev = std::make_shared<ChiEvaluator>(cfg, family, ep);
  return [ev, side](double x) { return ev->value_and_derivative(side, x); };
}

}  // namespace barrier
