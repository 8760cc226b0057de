#include <cmath>

#include <doctest.h>

#include "barrier/core.hpp"
#include "barrier/errors.hpp"
#include "barrier/spectral_measure.hpp"

using barrier::PhysicalConfig;
using barrier::SpectralBasis;

namespace {
const PhysicalConfig cfg;
}

TEST_CASE("theta_matrix rejects points on the continuous spectrum") {
  CHECK_THROWS_AS(barrier::theta_matrix(cfg, {3.0, 0.0}, SpectralBasis::initial),
                  barrier::OnCut);
  CHECK_NOTHROW(barrier::theta_matrix(cfg, {3.0, 0.1}, SpectralBasis::initial));
  CHECK_NOTHROW(barrier::theta_matrix(cfg, {-3.0, 0.0}, SpectralBasis::initial));
}

TEST_CASE("rho_interval validates its interval") {
  CHECK_THROWS_AS(barrier::rho_interval(cfg, 2.0, 1.0, SpectralBasis::initial),
                  std::invalid_argument);
  CHECK_THROWS_AS(barrier::rho_interval(cfg, -1.0, 1.0, SpectralBasis::initial),
                  std::invalid_argument);
  CHECK_THROWS_AS(barrier::rho_interval(cfg, 0.0, 1.0, SpectralBasis::initial),
                  std::invalid_argument);
}

TEST_CASE("positive intervals carry Lebesgue density one per channel") {
  const auto r = barrier::rho_interval(cfg, 1.0, 2.0, SpectralBasis::initial);
  CHECK(std::abs(r.rho[0][0] - 1.0) < 1e-6);
  CHECK(std::abs(r.rho[1][1] - 1.0) < 1e-6);
  CHECK(std::abs(r.rho[0][1]) < 1e-6);
  CHECK(std::abs(r.rho[1][0]) < 1e-6);
}

TEST_CASE("both solution bases give the same measure") {
  const auto ri = barrier::rho_interval(cfg, 0.5, 1.5, SpectralBasis::initial);
  const auto rf = barrier::rho_interval(cfg, 0.5, 1.5, SpectralBasis::final);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(std::abs(ri.rho[i][j] - rf.rho[i][j]) < 1e-6);
}

TEST_CASE("negative intervals carry no spectral mass") {
  const auto r = barrier::rho_interval(cfg, -4.0, -2.0, SpectralBasis::initial);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(r.rho[i][j]) < 1e-8);
}

TEST_CASE("the verdict splits the real line at zero") {
  const auto v = barrier::spectrum_verdict(cfg, {-5.0, -0.5, 0.0, 2.0, 20.0});
  CHECK(v[0] == barrier::SpectrumClass::resolvent_set);
  CHECK(v[1] == barrier::SpectrumClass::resolvent_set);
  CHECK(v[2] == barrier::SpectrumClass::spectrum);
  CHECK(v[3] == barrier::SpectrumClass::spectrum);
  CHECK(v[4] == barrier::SpectrumClass::spectrum);
}
