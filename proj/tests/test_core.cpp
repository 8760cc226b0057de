#include <complex>

#include <doctest.h>

#include "barrier/core.hpp"

using barrier::branch_sqrt;
using barrier::complex;
using barrier::PhysicalConfig;

TEST_CASE("branch_sqrt on reference points") {
  CHECK(std::abs(branch_sqrt({4.0, 0.0}) - complex(2.0, 0.0)) < 1e-15);
  // the cut maps to the positive imaginary axis
  CHECK(std::abs(branch_sqrt({-1.0, 0.0}) - complex(0.0, 1.0)) < 1e-15);
  const double r = std::sqrt(2.0);
  CHECK(std::abs(branch_sqrt({0.0, 4.0}) - complex(r, r)) < 1e-14);
  CHECK(std::abs(branch_sqrt({0.0, -4.0}) - complex(r, -r)) < 1e-14);
}

TEST_CASE("branch_sqrt squares back and keeps arg in (-pi/2, pi/2]") {
  const complex zs[] = {{3.0, 1.0}, {-2.0, 0.5}, {-2.0, -0.5},
                        {0.0, -7.0}, {1e-8, 0.0}, {-5.0, 0.0}};
  for (complex z : zs) {
    const complex w = branch_sqrt(z);
    CHECK(std::abs(w * w - z) < 1e-12 * std::max(1.0, std::abs(z)));
    CHECK(std::arg(w) > -barrier::pi / 2 - 1e-15);
    CHECK(std::arg(w) <= barrier::pi / 2 + 1e-15);
  }
}

TEST_CASE("branch_sqrt is conjugation-symmetric off the cut") {
  const complex z(2.0, 1.3);
  CHECK(std::abs(std::conj(branch_sqrt(std::conj(z))) - branch_sqrt(z)) <
        1e-15);
}

TEST_CASE("energy_point wavenumbers satisfy their defining relations") {
  PhysicalConfig cfg;  // m = hbar = 1, v0 = 10, [0, 1]
  const complex e(3.0, 0.7);
  const auto ep = barrier::energy_point(cfg, e);
  const double s = 2.0 * cfg.m / (cfg.hbar * cfg.hbar);
  CHECK(std::abs(ep.k * ep.k - s * e) < 1e-12);
  CHECK(std::abs(ep.q * ep.q - s * (e - cfg.v0)) < 1e-12);
  // the decaying wavenumber is the propagating one rotated by -i
  CHECK(std::abs(ep.k_tilde - complex(0.0, -1.0) * ep.k) < 1e-12);
  CHECK(std::abs(ep.q_tilde - complex(0.0, -1.0) * ep.q) < 1e-12);
}

TEST_CASE("energy_point_from_k keeps k verbatim, including k < 0") {
  PhysicalConfig cfg;
  const auto ep = barrier::energy_point_from_k(cfg, {-2.0, 0.0});
  CHECK(ep.k == complex(-2.0, 0.0));
  CHECK(std::abs(ep.e - complex(2.0, 0.0)) < 1e-14);
}

TEST_CASE("PhysicalConfig::validate rejects broken parameters") {
  PhysicalConfig cfg;
  cfg.validate();  // the default is fine
  PhysicalConfig bad = cfg;
  bad.b = bad.a;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.v0 = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.m = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.hbar = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
