#include <cmath>
#include <complex>
#include <memory>

#include <doctest.h>

#include "barrier/core.hpp"
#include "barrier/test_space.hpp"

using barrier::complex;
using barrier::Jet;
using barrier::PhysicalConfig;
using barrier::TestFunction;

namespace {
const PhysicalConfig cfg;
}

TEST_CASE("jets propagate exact derivatives through exp") {
  // f(x) = exp(x^2) at x = 0.3: f' = 2x f, f'' = (2 + 4x^2) f
  const double x = 0.3;
  const Jet u = barrier::jet_var(x, 4);
  const Jet f = barrier::jet_exp(u * u);
  const double fx = std::exp(x * x);
  CHECK(std::abs(f.derivative(0) - fx) < 1e-14);
  CHECK(std::abs(f.derivative(1) - 2.0 * x * fx) < 1e-13);
  CHECK(std::abs(f.derivative(2) - (2.0 + 4.0 * x * x) * fx) < 1e-13);
}

TEST_CASE("jet_recip inverts pointwise") {
  const Jet u = barrier::jet_const(1.0, 3) + barrier::jet_var(0.5, 3);
  const Jet r = barrier::jet_recip(u);
  CHECK(std::abs((u * r).derivative(0) - 1.0) < 1e-14);
  CHECK(std::abs((u * r).derivative(1)) < 1e-13);
}

TEST_CASE("test functions are flat at both barrier edges") {
  const TestFunction phi(cfg, 0.5, 0.7, 2.0, 0.1);
  for (double edge : {cfg.a, cfg.b})
    for (int d = 0; d <= 3; ++d)
      CHECK(std::abs(phi.derivative(edge, d)) < 1e-30);
  // but genuinely nonzero nearby
  CHECK(std::abs(phi.value(0.5)) > 0.1);
}

TEST_CASE("jet derivatives match finite differences away from the edges") {
  const TestFunction phi(cfg, -3.0, 1.0, 1.5, 0.1);
  const double x = -2.4, h = 1e-5;
  const complex fd =
      (phi.value(x + h) - phi.value(x - h)) / (2.0 * h);
  CHECK(std::abs(phi.derivative(x, 1) - fd) < 1e-8);
}

TEST_CASE("operator words compose") {
  auto base = std::make_shared<TestFunction>(cfg, -3.0, 1.0, 1.5, 0.1);
  const auto pq = barrier::apply_word(cfg, base, 1, 1, 0);  // P Q
  const auto q_first =
      barrier::apply_operator(cfg, barrier::apply_operator(cfg, base,
                                                           barrier::Op::Q),
                              barrier::Op::P);
  for (double x : {-4.0, -2.5, -1.0})
    CHECK(std::abs(pq->value(x) - q_first->value(x)) < 1e-13);
}

TEST_CASE("H acts as the differential operator") {
  auto base = std::make_shared<TestFunction>(cfg, -3.0, 1.0, 1.5, 0.1);
  const auto h = barrier::apply_operator(cfg, base, barrier::Op::H);
  const double x = -2.7;  // outside the barrier, V = 0
  const complex expect =
      -cfg.hbar * cfg.hbar / (2.0 * cfg.m) * base->derivative(x, 2);
  CHECK(std::abs(h->value(x) - expect) < 1e-12);
}

TEST_CASE("seminorms are finite, positive, and monotone under H") {
  const TestFunction phi(cfg, -3.0, 1.0, 1.5, 0.1);
  const double n000 = barrier::norm_nml(cfg, phi, {0, 0, 0});
  CHECK(n000 > 0.0);
  CHECK(std::isfinite(barrier::norm_nml(cfg, phi, {2, 2, 2})));
}

TEST_CASE("canonical commutators hold on the test space") {
  const TestFunction phi(cfg, -3.0, 1.0, 1.5, 0.1);
  CHECK(barrier::commutator_check(cfg, phi, barrier::CommutatorPair::QP) <
        1e-7);
  CHECK(barrier::commutator_check(cfg, phi, barrier::CommutatorPair::HQ) <
        1e-7);
  CHECK(barrier::commutator_check(cfg, phi, barrier::CommutatorPair::HP) <
        1e-7);
}

TEST_CASE("eigenfunctionals are continuous in the seminorm topology") {
  const TestFunction phi(cfg, -3.0, 1.0, 1.5, 0.1);
  const auto fb = barrier::functional_bound_check(cfg, phi, 4.0);
  CHECK(fb.lhs <= fb.rhs);
  CHECK(fb.rhs > 0.0);
}
