#include <complex>

#include <doctest.h>

#include "barrier/coefficients.hpp"
#include "barrier/core.hpp"
#include "barrier/errors.hpp"
#include "barrier/reference.hpp"

using barrier::complex;
using barrier::PhysicalConfig;

namespace {
const PhysicalConfig cfg;  // m = hbar = 1, v0 = 10, barrier [0, 1]
}

TEST_CASE("closed forms match the interface-matrix path at real k") {
  for (double k : {0.7, 2.0, 3.1622776601683795, 6.0}) {
    const auto cs =
        barrier::plus_coefficients(cfg, barrier::energy_point_from_k(cfg, k));
    const auto ref = barrier::reference::transfer_matrix_amplitudes(cfg, k);
    CHECK(std::abs(cs.t - ref.t) < 1e-12);
    CHECK(std::abs(cs.r_l - ref.r_l) < 1e-12);
    CHECK(std::abs(cs.r_r - ref.r_r) < 1e-12);
    CHECK(std::abs(cs.a_l - ref.a_l) < 1e-12);
    CHECK(std::abs(cs.b_l - ref.b_l) < 1e-12);
    CHECK(std::abs(cs.a_r - ref.a_r) < 1e-12);
    CHECK(std::abs(cs.b_r - ref.b_r) < 1e-12);
  }
}

TEST_CASE("unitarity |T|^2 + |R|^2 = 1 on the real axis") {
  for (double k : {0.5, 1.0, 4.47213595499958, 9.0}) {
    const auto cs =
        barrier::plus_coefficients(cfg, barrier::energy_point_from_k(cfg, k));
    CHECK(std::abs(std::norm(cs.t) + std::norm(cs.r_l) - 1.0) < 1e-13);
    CHECK(std::abs(std::norm(cs.t) + std::norm(cs.r_r) - 1.0) < 1e-13);
  }
}

TEST_CASE("the second family is the conjugate of the first at real k") {
  const auto ep = barrier::energy_point_from_k(cfg, 2.5);
  const auto plus = barrier::plus_coefficients(cfg, ep);
  const auto star = barrier::star_coefficients(cfg, ep);
  CHECK(std::abs(star.t - std::conj(plus.t)) < 1e-14);
  CHECK(std::abs(star.r_l - std::conj(plus.r_l)) < 1e-14);
  CHECK(std::abs(star.r_r - std::conj(plus.r_r)) < 1e-14);
}

TEST_CASE("subbarrier |T|^2 matches the textbook closed form") {
  for (double e : {1.0, 5.0, 9.5}) {
    const auto cs = barrier::plus_coefficients(
        cfg, barrier::energy_point(cfg, e));
    CHECK(std::abs(std::norm(cs.t) -
                   barrier::reference::transmission_probability_subbarrier(
                       cfg, e)) < 1e-12);
  }
}

TEST_CASE("the first interior resonance is perfectly transparent") {
  const double l = cfg.width();
  const double e_res =
      cfg.v0 + barrier::pi * barrier::pi * cfg.hbar * cfg.hbar /
                   (2.0 * cfg.m * l * l);
  const auto cs =
      barrier::plus_coefficients(cfg, barrier::energy_point(cfg, e_res));
  CHECK(std::abs(std::abs(cs.t) - 1.0) < 1e-12);
  CHECK(std::abs(cs.r_l) < 1e-12);
}

TEST_CASE("decaying-family amplitudes continue the closed forms") {
  // at negative energy the decaying family equals the propagating one
  // evaluated at the rotated wavenumber i*k_tilde
  const auto ep = barrier::energy_point(cfg, -2.0);
  const auto td = barrier::tilde_coefficients(cfg, ep);
  const complex k_rot = complex(0.0, 1.0) * ep.k_tilde;
  const auto ref =
      barrier::reference::transfer_matrix_amplitudes(cfg, k_rot);
  CHECK(std::abs(td.t - ref.t) < 1e-12 * std::abs(ref.t));
  CHECK(std::abs(td.r_l - ref.r_l) < 1e-12);
  CHECK(std::abs(td.t) > 1e-10);  // never zero on the negative half line
}

TEST_CASE("amplitudes stay continuous through the degenerate point q = 0") {
  // exactly at E = v0 the interior basis degenerates; the evaluator must
  // switch to the series branch and agree with nearby direct evaluations
  const auto at = [&](double e) {
    return barrier::plus_coefficients(cfg, barrier::energy_point(cfg, e)).t;
  };
  const complex t0 = at(cfg.v0);
  CHECK(std::abs(t0 - at(cfg.v0 + 1e-7)) < 1e-6);
  CHECK(std::abs(t0 - at(cfg.v0 - 1e-7)) < 1e-6);
  const auto cs =
      barrier::plus_coefficients(cfg, barrier::energy_point(cfg, cfg.v0));
  CHECK(cs.degenerate);
}

TEST_CASE("zero wavenumber is rejected") {
  CHECK_THROWS_AS(barrier::plus_coefficients(
                      cfg, barrier::energy_point_from_k(cfg, 0.0)),
                  barrier::ZeroWavenumber);
}

TEST_CASE("coefficients_at carries the family-adjusted arguments") {
  const auto ep = barrier::energy_point_from_k(cfg, {1.0, 0.5});
  const auto direct =
      barrier::coefficients_at(cfg, ep.k, ep.q, barrier::Family::plus);
  const auto via = barrier::plus_coefficients(cfg, ep);
  CHECK(std::abs(direct.t - via.t) < 1e-15);
  CHECK(direct.k == via.k);
  CHECK(direct.q == via.q);
}
