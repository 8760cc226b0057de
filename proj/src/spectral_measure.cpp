#include "barrier/spectral_measure.hpp"

#include <cmath>

#include "barrier/coefficients.hpp"
#include "barrier/errors.hpp"
#include "barrier/quadrature.hpp"

namespace barrier {

namespace {
const complex I(0.0, 1.0);
const complex TWO_PI_OVER_I = 2.0 * pi / I;
}  // namespace

ThetaMatrix theta_matrix(const PhysicalConfig& cfg, complex e,
                         SpectralBasis basis) {
  if (std::imag(e) == 0.0 && std::real(e) >= 0.0)
    throw OnCut("theta_matrix: e on the continuous spectrum");
  ThetaMatrix th;
  th.basis = basis;
  const EnergyPoint ep = energy_point(cfg, e);
  if (std::real(e) < 0.0) {
    th.quadrant = GreenRegion::left_half;
    const CoefficientSet cs = tilde_coefficients(cfg, ep);
    th.entries[1][0] = -2.0 * pi / cs.t;
    return th;
  }
  if (std::imag(e) > 0.0) {
    th.quadrant = GreenRegion::first_quadrant;
    const CoefficientSet star = star_coefficients(cfg, ep);
    if (basis == SpectralBasis::initial) {
      th.entries[0][0] = TWO_PI_OVER_I;
      th.entries[0][1] = -TWO_PI_OVER_I * star.r_l / star.t;
    } else {
      th.entries[0][1] = -TWO_PI_OVER_I * star.r_r / star.t;
      th.entries[1][1] = TWO_PI_OVER_I;
    }
  } else {
    th.quadrant = GreenRegion::fourth_quadrant;
    const CoefficientSet plus = plus_coefficients(cfg, ep);
    if (basis == SpectralBasis::initial) {
      th.entries[0][1] = TWO_PI_OVER_I * plus.r_r / plus.t;
      th.entries[1][1] = -TWO_PI_OVER_I;
    } else {
      th.entries[0][0] = -TWO_PI_OVER_I;
      th.entries[0][1] = TWO_PI_OVER_I * plus.r_l / plus.t;
    }
  }
  return th;
}

namespace {

// [theta(E - i eps) - theta(E + i eps)] / (2 pi i), entrywise
void boundary_jump(const PhysicalConfig& cfg, double e, double eps,
                   SpectralBasis basis, complex out[2][2]) {
  const ThetaMatrix below = theta_matrix(cfg, complex(e, -eps), basis);
  const ThetaMatrix above = theta_matrix(cfg, complex(e, eps), basis);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out[i][j] =
          (below.entries[i][j] - above.entries[i][j]) / (2.0 * pi * I);
}

// Extrapolate the jump to eps -> 0+ from three offsets (Neville on eps),
// flagging non-contracting tails.
void extrapolated_jump(const PhysicalConfig& cfg, double e,
                       SpectralBasis basis, complex out[2][2]) {
  static const double eps[3] = {1e-3, 1e-4, 1e-5};
  complex j0[2][2], j1[2][2], j2[2][2];
  boundary_jump(cfg, e, eps[0], basis, j0);
  boundary_jump(cfg, e, eps[1], basis, j1);
  boundary_jump(cfg, e, eps[2], basis, j2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double d01 = std::abs(j1[i][j] - j0[i][j]);
      const double d12 = std::abs(j2[i][j] - j1[i][j]);
      if (d12 > 0.5 * d01 + 1e-12)
        throw ExtrapolationUnstable(
            "rho_interval: boundary jump not contracting in epsilon");
      // Neville step on the nodes eps[0..2] toward eps = 0
      const complex p01 =
          (eps[0] * j1[i][j] - eps[1] * j0[i][j]) / (eps[0] - eps[1]);
      const complex p12 =
          (eps[1] * j2[i][j] - eps[2] * j1[i][j]) / (eps[1] - eps[2]);
      out[i][j] = (eps[0] * p12 - eps[2] * p01) / (eps[0] - eps[2]);
    }
}

}  // namespace

SpectralMeasureInterval rho_interval(const PhysicalConfig& cfg, double e1,
                                     double e2, SpectralBasis basis) {
  if (!(e1 < e2) || (e1 < 0.0 && e2 > 0.0) || e1 == 0.0 || e2 == 0.0)
    throw std::invalid_argument(
        "rho_interval: need e1 < e2 on one side of 0, endpoints nonzero");
  SpectralMeasureInterval out;
  out.e1 = e1;
  out.e2 = e2;

  complex acc[2][2];
  int nodes_per_unit = 64;
  double prev_diag = 0.0;
  for (int round = 0;; ++round) {
    const int n = std::max(
        16, int(nodes_per_unit * (e2 - e1) + 0.5));
    const GLRule& rule = gauss_legendre(std::min(n, 2048));
    const double mid = 0.5 * (e1 + e2), half = 0.5 * (e2 - e1);
    complex sum[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      complex jump[2][2];
      extrapolated_jump(cfg, mid + half * rule.nodes[i], basis, jump);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) sum[r][c] += rule.weights[i] * jump[r][c];
    }
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) acc[r][c] = half * sum[r][c];
    const double diag = std::abs(acc[0][0]) + std::abs(acc[1][1]);
    if (round > 0 && std::abs(diag - prev_diag) < 1e-8) break;
    if (nodes_per_unit >= 1024)
      throw QuadratureFailure("rho_interval: node doubling did not settle");
    prev_diag = diag;
    nodes_per_unit *= 2;
  }
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.rho[r][c] = std::real(acc[r][c]);
  return out;
}

std::vector<SpectrumClass> spectrum_verdict(const PhysicalConfig& cfg,
                                            const std::vector<double>& e_grid) {
  std::vector<SpectrumClass> out;
  out.reserve(e_grid.size());
  for (double e : e_grid) {
    if (e >= 0.0) {
      // boundary jump of the resolvent across [0, inf) never vanishes;
      // E = 0 is spectrum by closure
      out.push_back(SpectrumClass::spectrum);
      continue;
    }
    // extrapolate to eps -> 0 so the O(eps) drift of an analytic theta does
    // not masquerade as spectral mass
    complex jump[2][2];
    extrapolated_jump(cfg, e, SpectralBasis::initial, jump);
    double mass = 0.0;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) mass = std::max(mass, std::abs(jump[r][c]));
    out.push_back(mass < 1e-6 ? SpectrumClass::resolvent_set
                              : SpectrumClass::spectrum);
  }
  return out;
}

}  // namespace barrier
