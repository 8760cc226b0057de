#ifndef BARRIER_COEFFICIENTS_HPP
#define BARRIER_COEFFICIENTS_HPP

#include "barrier/core.hpp"

namespace barrier {

enum class Family { plus, star, tilde };

// The eight amplitudes of one solution family, prefactor-free.
// t transmits, r_l / r_r reflect (left/right incidence), a_*, b_* weigh the
// interior basis. Near q = 0 the interior basis degenerates and a, b blow up
// like 1/q; the combinations sum = a+b and qdiff = q*(a-b) stay finite, and
// the interior piece is sum*cos(qx) + i*qdiff*(sin(qx)/q).
struct CoefficientSet {
  Family family = Family::plus;
  complex t;
  complex a_r, b_r, r_r;
  complex r_l, a_l, b_l;
  complex sum_r, qdiff_r;
  complex sum_l, qdiff_l;
  // arguments the closed forms were evaluated at (family-adjusted)
  complex k, q;
  bool degenerate = false;
};

CoefficientSet plus_coefficients(const PhysicalConfig& cfg,
                                 const EnergyPoint& ep);
CoefficientSet star_coefficients(const PhysicalConfig& cfg,
                                 const EnergyPoint& ep);
CoefficientSet tilde_coefficients(const PhysicalConfig& cfg,
                                  const EnergyPoint& ep);

// Core evaluator behind all three families (they share one algebraic shape
// under exact argument substitutions). Exposed for tests.
CoefficientSet coefficients_at(const PhysicalConfig& cfg, complex k, complex q,
                               Family tag);

}  // namespace barrier

#endif
