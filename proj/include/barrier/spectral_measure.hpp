#ifndef BARRIER_SPECTRAL_MEASURE_HPP
#define BARRIER_SPECTRAL_MEASURE_HPP

#include <vector>

#include "barrier/core.hpp"
#include "barrier/greens.hpp"

namespace barrier {

enum class SpectralBasis { initial, final };

struct ThetaMatrix {
  complex entries[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  GreenRegion quadrant = GreenRegion::left_half;
  SpectralBasis basis = SpectralBasis::initial;
};

// Boundary-expansion matrix of the resolvent kernel in the chosen solution
// basis; entries built from the coefficient families, region by region.
ThetaMatrix theta_matrix(const PhysicalConfig& cfg, complex e,
                         SpectralBasis basis);

struct SpectralMeasureInterval {
  double e1 = 0.0, e2 = 0.0;
  double rho[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
};

// Matrix measure of (e1, e2) from the boundary jump of theta across the real
// axis, extrapolated in the offset epsilon and integrated by Gauss-Legendre
// panels. The interval must not straddle 0.
SpectralMeasureInterval rho_interval(const PhysicalConfig& cfg, double e1,
                                     double e2, SpectralBasis basis);

enum class SpectrumClass { resolvent_set, spectrum };

std::vector<SpectrumClass> spectrum_verdict(const PhysicalConfig& cfg,
                                            const std::vector<double>& e_grid);

}  // namespace barrier

#endif
