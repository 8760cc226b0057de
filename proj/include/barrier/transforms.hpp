#ifndef BARRIER_TRANSFORMS_HPP
#define BARRIER_TRANSFORMS_HPP

#include <vector>

#include "barrier/core.hpp"
#include "barrier/eigenfunctions.hpp"
#include "barrier/test_space.hpp"

namespace barrier {

enum class Axis { position, momentum, energy, wavenumber };

struct SampledFunction {
  Axis axis = Axis::position;
  std::vector<double> grid;       // uniform, strictly increasing, odd count
  std::vector<complex> values;
  double window_lo = 0.0, window_hi = 0.0;

  double spacing() const { return grid[1] - grid[0]; }
};

// (f_l, f_r) on an energy or wavenumber grid; the spectrum is doubly
// degenerate so both channels are always carried.
struct TwoComponentSpectralFunction {
  Axis axis = Axis::energy;
  std::vector<double> grid;  // k values; energy axis stores E = hbar^2 k^2/2m
  std::vector<double> k_grid;
  std::vector<complex> left_values;
  std::vector<complex> right_values;
  ChiFamily family = ChiFamily::plus;
};

struct QuadratureSpec {
  double x_lo = -20.0, x_hi = 20.0;
  int n_x = 2049;               // odd
  double k_min = 1e-3, k_max = 40.0;
  int n_k = 4001;               // odd
  double abs_tol = 1e-9, rel_tol = 1e-8;
  double tail_guard = 1e-4;     // max |f| allowed near k_max, relative

  // window = support padded 25% plus the barrier; k range sized to the
  // packet's spectral content, >= 10 x-nodes per fastest oscillation
  static QuadratureSpec for_function(const PhysicalConfig& cfg,
                                     const TestFunction& phi);
};

SampledFunction sample(const PhysicalConfig& cfg, const WaveFunction& phi,
                       const QuadratureSpec& spec);

// Precomputes the eigensolution coefficients on the k-grid once; all
// transform passes share the tables.
class SpectralTransformer {
 public:
  SpectralTransformer(const PhysicalConfig& cfg, ChiFamily family,
                      const QuadratureSpec& spec);

  TwoComponentSpectralFunction forward(const SampledFunction& phi,
                                       Axis out_axis = Axis::energy) const;
  SampledFunction inverse(const TwoComponentSpectralFunction& f) const;
  complex reconstruct_at(const TwoComponentSpectralFunction& f,
                         double x) const;
  // inverse with the phase e^{-iEt/hbar} applied (time evolution)
  SampledFunction evolve(const TwoComponentSpectralFunction& f,
                         double t) const;

  const QuadratureSpec& spec() const { return spec_; }
  const std::vector<double>& k_grid() const { return k_; }
  // dE weights for spectral-side integrals (Simpson in k times hbar^2 k/m)
  const std::vector<double>& energy_weights() const { return we_; }

 private:
  PhysicalConfig cfg_;
  ChiFamily family_;
  QuadratureSpec spec_;
  std::vector<double> k_;
  std::vector<double> wk_;  // Simpson weights in k
  std::vector<double> we_;  // wk * hbar^2 k / m
  std::vector<ChiEvaluator> evals_;
};

TwoComponentSpectralFunction forward_energy(const PhysicalConfig& cfg,
                                            const SampledFunction& phi,
                                            ChiFamily family,
                                            const QuadratureSpec& spec);
SampledFunction inverse_energy(const PhysicalConfig& cfg,
                               const TwoComponentSpectralFunction& f,
                               const QuadratureSpec& spec);
TwoComponentSpectralFunction wavenumber_transform(const PhysicalConfig& cfg,
                                                  const SampledFunction& phi,
                                                  ChiFamily family,
                                                  const QuadratureSpec& spec);
double diagonalization_check(const PhysicalConfig& cfg, const TestFunction& phi,
                             ChiFamily family, const QuadratureSpec& spec);

SampledFunction fourier(const PhysicalConfig& cfg, const SampledFunction& phi,
                        const QuadratureSpec& spec);
SampledFunction inverse_fourier(const PhysicalConfig& cfg,
                                const SampledFunction& phat,
                                const QuadratureSpec& spec);
complex fourier_reconstruct_at(const PhysicalConfig& cfg,
                               const SampledFunction& phat, double x);

struct ParsevalResult {
  complex position, energy, momentum;
};
ParsevalResult parseval_check(const PhysicalConfig& cfg,
                              const TestFunction& phi, const TestFunction& psi,
                              const QuadratureSpec& spec);

struct MomentResult {
  complex position_side, spectral_side;
};
enum class Observable { H, P, Q };
MomentResult moment_check(const PhysicalConfig& cfg, const TestFunction& phi,
                          const TestFunction& psi, int n, Observable which,
                          const QuadratureSpec& spec);

complex reconstruct_at(const PhysicalConfig& cfg, const TestFunction& phi,
                       double x, ChiFamily family, const QuadratureSpec& spec);

// L2 metrics on shared grids
double l2_norm(const SampledFunction& f);
double l2_distance(const SampledFunction& f, const SampledFunction& g);
double l2_norm_spectral(const PhysicalConfig& cfg,
                        const TwoComponentSpectralFunction& f);

}  // namespace barrier

#endif
