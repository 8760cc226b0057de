#ifndef BARRIER_REFERENCE_HPP
#define BARRIER_REFERENCE_HPP

#include "barrier/core.hpp"

namespace barrier {
namespace reference {

// Independent cross-check path: amplitudes from 2x2 plane-wave interface
// matrices solved directly, sharing no code with the closed forms.
struct ScatteringAmplitudes {
  complex t;
  complex a_r, b_r, r_r;
  complex r_l, a_l, b_l;
};

ScatteringAmplitudes transfer_matrix_amplitudes(const PhysicalConfig& cfg,
                                                complex k);

// |T|^2 for the rectangular barrier from the textbook closed form,
// valid for 0 < E < v0.
double transmission_probability_subbarrier(const PhysicalConfig& cfg, double e);

}  // namespace reference
}  // namespace barrier

#endif
