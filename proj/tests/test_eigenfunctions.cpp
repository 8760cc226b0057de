#include <complex>

#include <doctest.h>

#include "barrier/core.hpp"
#include "barrier/eigenfunctions.hpp"

using barrier::ChiEvaluator;
using barrier::ChiFamily;
using barrier::complex;
using barrier::PhysicalConfig;
using barrier::Side;

namespace {
const PhysicalConfig cfg;
}

TEST_CASE("piecewise solutions are C^1 at both barrier edges") {
  for (ChiFamily fam : {ChiFamily::plus, ChiFamily::minus, ChiFamily::tilde}) {
    const complex e = fam == ChiFamily::tilde ? complex(-2.0, 0.0)
                                              : complex(3.0, 0.0);
    const ChiEvaluator ev(cfg, fam, barrier::energy_point(cfg, e));
    for (Side side : {Side::left, Side::right}) {
      const auto [vl, dl] = ev.piece(side, 0, cfg.a);
      const auto [vi_a, di_a] = ev.piece(side, 1, cfg.a);
      CHECK(std::abs(vl - vi_a) < 1e-12);
      CHECK(std::abs(dl - di_a) < 1e-12);
      const auto [vi_b, di_b] = ev.piece(side, 1, cfg.b);
      const auto [vr, dr] = ev.piece(side, 2, cfg.b);
      CHECK(std::abs(vi_b - vr) < 1e-12);
      CHECK(std::abs(di_b - dr) < 1e-12);
    }
  }
}

TEST_CASE("solutions satisfy the eigenvalue equation pointwise") {
  const complex e(7.3, 0.0);
  const ChiEvaluator ev(cfg, ChiFamily::plus, barrier::energy_point(cfg, e));
  const double h = 1e-4;
  for (double x : {-2.0, 0.4, 2.5}) {
    const complex fm = ev.value(Side::left, x - h);
    const complex f0 = ev.value(Side::left, x);
    const complex fp = ev.value(Side::left, x + h);
    const complex second = (fp - 2.0 * f0 + fm) / (h * h);
    const complex lhs = -cfg.hbar * cfg.hbar / (2.0 * cfg.m) * second +
                        cfg.potential(x) * f0;
    CHECK(std::abs(lhs - e * f0) < 1e-6 * std::abs(f0));
  }
}

TEST_CASE("conjugating the outgoing family gives the incoming one") {
  const complex e(4.0, 1.0);
  const ChiEvaluator plus(cfg, ChiFamily::plus,
                          barrier::energy_point(cfg, std::conj(e)));
  const ChiEvaluator minus(cfg, ChiFamily::minus,
                           barrier::energy_point(cfg, e));
  for (double x : {-1.5, 0.5, 2.0})
    CHECK(std::abs(std::conj(plus.value(Side::left, x)) -
                   minus.value(Side::left, x)) < 1e-12);
}

TEST_CASE("left and right solutions are independent: Wronskian constant") {
  const auto ep = barrier::energy_point(cfg, {3.0, 0.0});
  const auto fl = barrier::chi_fn(cfg, ChiFamily::plus, Side::left, ep);
  const auto fr = barrier::chi_fn(cfg, ChiFamily::plus, Side::right, ep);
  const complex w0 = barrier::wronskian(fr, fl, -1.0);
  CHECK(std::abs(w0) > 1e-10);
  for (double x : {0.3, 0.9, 4.0})
    CHECK(std::abs(barrier::wronskian(fr, fl, x) - w0) < 1e-12 * std::abs(w0));
}

TEST_CASE("plane_wave is the normalized free exponential") {
  const double p = 1.7, x = 0.4;
  const complex expect =
      std::exp(complex(0.0, p * x / cfg.hbar)) /
      std::sqrt(2.0 * barrier::pi * cfg.hbar);
  CHECK(std::abs(barrier::plane_wave(cfg, x, p) - expect) < 1e-15);
}

TEST_CASE("zero barrier height collapses the solutions to plane waves") {
  PhysicalConfig free_cfg = cfg;
  free_cfg.v0 = 0.0;
  const double k = 2.0;
  const auto ep = barrier::energy_point_from_k(free_cfg, k);
  const ChiEvaluator ev(free_cfg, ChiFamily::plus, ep);
  // chi carries the extra 1/sqrt(hbar^2 k / m) energy-normalization factor
  const double s = std::sqrt(free_cfg.m / (free_cfg.hbar * free_cfg.hbar * k));
  for (double x : {-3.0, 0.2, 1.7}) {
    const complex pw = barrier::plane_wave(free_cfg, x, free_cfg.hbar * k);
    CHECK(std::abs(ev.value(Side::left, x) - s * pw) < 1e-13);
  }
}

TEST_CASE("value_and_derivative agrees with the per-piece evaluator") {
  const ChiEvaluator ev(cfg, ChiFamily::plus,
                        barrier::energy_point(cfg, {5.0, 0.0}));
  const double x = 0.6;  // interior
  const auto [v, d] = ev.value_and_derivative(Side::right, x);
  const auto [vp, dp] = ev.piece(Side::right, 1, x);
  CHECK(v == vp);
  CHECK(d == dp);
}
