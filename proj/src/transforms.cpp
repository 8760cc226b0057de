#include "barrier/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "barrier/errors.hpp"
#include "barrier/parallel.hpp"
#include "barrier/quadrature.hpp"

namespace barrier {

namespace {
const complex I(0.0, 1.0);

std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  const double h = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = lo + i * h;
  g.back() = hi;
  return g;
}

void check_sampled(const SampledFunction& f) {
  if (f.grid.size() != f.values.size() || f.grid.size() < 3 ||
      f.grid.size() % 2 == 0)
    throw QuadratureFailure("SampledFunction: need odd matched grid/values");
}

int make_odd(int n) { return (n % 2 == 0) ? n + 1 : n; }
}  // namespace

QuadratureSpec QuadratureSpec::for_function(const PhysicalConfig& cfg,
                                            const TestFunction& phi) {
  QuadratureSpec s;
  const double lo = std::min(phi.support_lo(), cfg.a - 1.0);
  const double hi = std::max(phi.support_hi(), cfg.b + 1.0);
  const double pad = 0.25 * (hi - lo);
  s.x_lo = lo - pad;
  s.x_hi = hi + pad;
  const double kc = std::abs(phi.momentum()) / cfg.hbar;
  s.k_max = std::max(5.0, kc + 9.0 / phi.width());
  s.k_min = 1e-3;
  s.n_k = make_odd(std::max(2001, int((s.k_max - s.k_min) / 0.005) + 1));
  const double len = s.x_hi - s.x_lo;
  s.n_x = make_odd(std::max(1025, int(10.0 * s.k_max * len / (2.0 * pi)) + 1));
  return s;
}

SampledFunction sample(const PhysicalConfig& /*cfg*/, const WaveFunction& phi,
                       const QuadratureSpec& spec) {
  SampledFunction f;
  f.axis = Axis::position;
  f.grid = uniform_grid(spec.x_lo, spec.x_hi, spec.n_x);
  f.values.resize(f.grid.size());
  for (size_t i = 0; i < f.grid.size(); ++i) f.values[i] = phi.value(f.grid[i]);
  f.window_lo = spec.x_lo;
  f.window_hi = spec.x_hi;
  return f;
}

SpectralTransformer::SpectralTransformer(const PhysicalConfig& cfg,
                                         ChiFamily family,
                                         const QuadratureSpec& spec)
    : cfg_(cfg), family_(family), spec_(spec) {
  if (family == ChiFamily::tilde)
    throw std::invalid_argument("SpectralTransformer: tilde has no transform");
  k_ = uniform_grid(spec.k_min, spec.k_max, spec.n_k);
  wk_ = simpson_weights(spec.n_k, k_[1] - k_[0]);
  we_.resize(k_.size());
  evals_.reserve(k_.size());
  const double jac = cfg.hbar * cfg.hbar / cfg.m;
  for (size_t i = 0; i < k_.size(); ++i) {
    we_[i] = wk_[i] * jac * k_[i];
    evals_.emplace_back(cfg, family, energy_point_from_k(cfg, k_[i]));
  }
}

TwoComponentSpectralFunction SpectralTransformer::forward(
    const SampledFunction& phi, Axis out_axis) const {
  check_sampled(phi);
  const int nx = int(phi.grid.size());
  const auto wx = simpson_weights(nx, phi.spacing());
  TwoComponentSpectralFunction out;
  out.axis = out_axis;
  out.family = family_;
  out.k_grid = k_;
  out.grid.resize(k_.size());
  out.left_values.resize(k_.size());
  out.right_values.resize(k_.size());
  const double jac_half = cfg_.hbar * cfg_.hbar / cfg_.m;
  parallel_for(k_.size(), [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      const ChiEvaluator& ev = evals_[i];
      complex accl = 0.0, accr = 0.0;
      for (int j = 0; j < nx; ++j) {
        const complex w = wx[j] * phi.values[j];
        accl += w * std::conj(ev.value(Side::left, phi.grid[j]));
        accr += w * std::conj(ev.value(Side::right, phi.grid[j]));
      }
      if (out_axis == Axis::wavenumber) {
        const double scale = std::sqrt(jac_half * k_[i]);
        accl *= scale;
        accr *= scale;
        out.grid[i] = k_[i];
      } else {
        out.grid[i] = 0.5 * jac_half * k_[i] * k_[i];
      }
      out.left_values[i] = accl;
      out.right_values[i] = accr;
    }
  });
  return out;
}

namespace {

void check_tail(const TwoComponentSpectralFunction& f, double guard) {
  double peak = 0.0, tail = 0.0;
  const size_t n = f.k_grid.size();
  const size_t cut = n - std::max<size_t>(2, n / 50);
  for (size_t i = 0; i < n; ++i) {
    const double m =
        std::max(std::abs(f.left_values[i]), std::abs(f.right_values[i]));
    peak = std::max(peak, m);
    if (i >= cut) tail = std::max(tail, m);
  }
  if (peak > 0.0 && tail > guard * peak)
    throw TailMass("spectral data does not decay inside the k-grid");
}

}  // namespace

SampledFunction SpectralTransformer::inverse(
    const TwoComponentSpectralFunction& f) const {
  return evolve(f, 0.0);
}

SampledFunction SpectralTransformer::evolve(
    const TwoComponentSpectralFunction& f, double t) const {
  if (f.k_grid.size() != k_.size())
    throw QuadratureFailure("inverse: spectral grid mismatch");
  check_tail(f, spec_.tail_guard);
  SampledFunction out;
  out.axis = Axis::position;
  out.grid = uniform_grid(spec_.x_lo, spec_.x_hi, spec_.n_x);
  out.values.assign(out.grid.size(), 0.0);
  out.window_lo = spec_.x_lo;
  out.window_hi = spec_.x_hi;
  const double jac = cfg_.hbar * cfg_.hbar / cfg_.m;
  std::vector<complex> wl(k_.size()), wr(k_.size());
  for (size_t i = 0; i < k_.size(); ++i) {
    complex fl = f.left_values[i], fr = f.right_values[i];
    if (f.axis == Axis::wavenumber) {
      const double scale = std::sqrt(jac * k_[i]);
      fl /= scale;
      fr /= scale;
    }
    if (t != 0.0) {
      const double e = 0.5 * jac * k_[i] * k_[i];
      const complex phase = std::exp(-I * e * t / cfg_.hbar);
      fl *= phase;
      fr *= phase;
    }
    wl[i] = we_[i] * fl;
    wr[i] = we_[i] * fr;
  }
  parallel_for(out.grid.size(), [&](size_t lo, size_t hi) {
    for (size_t j = lo; j < hi; ++j) {
      complex acc = 0.0;
      for (size_t i = 0; i < k_.size(); ++i)
        acc += wl[i] * evals_[i].value(Side::left, out.grid[j]) +
               wr[i] * evals_[i].value(Side::right, out.grid[j]);
      out.values[j] = acc;
    }
  });
  return out;
}

complex SpectralTransformer::reconstruct_at(
    const TwoComponentSpectralFunction& f, double x) const {
  if (f.k_grid.size() != k_.size())
    throw QuadratureFailure("reconstruct_at: spectral grid mismatch");
  const double jac = cfg_.hbar * cfg_.hbar / cfg_.m;
  complex acc = 0.0;
  for (size_t i = 0; i < k_.size(); ++i) {
    complex fl = f.left_values[i], fr = f.right_values[i];
    if (f.axis == Axis::wavenumber) {
      const double scale = std::sqrt(jac * k_[i]);
      fl /= scale;
      fr /= scale;
    }
    acc += we_[i] * (fl * evals_[i].value(Side::left, x) +
                     fr * evals_[i].value(Side::right, x));
  }
  return acc;
}

TwoComponentSpectralFunction forward_energy(const PhysicalConfig& cfg,
                                            const SampledFunction& phi,
                                            ChiFamily family,
                                            const QuadratureSpec& spec) {
  return SpectralTransformer(cfg, family, spec).forward(phi);
}

SampledFunction inverse_energy(const PhysicalConfig& cfg,
                               const TwoComponentSpectralFunction& f,
                               const QuadratureSpec& spec) {
  return SpectralTransformer(cfg, f.family, spec).inverse(f);
}

TwoComponentSpectralFunction wavenumber_transform(const PhysicalConfig& cfg,
                                                  const SampledFunction& phi,
                                                  ChiFamily family,
                                                  const QuadratureSpec& spec) {
  return SpectralTransformer(cfg, family, spec).forward(phi, Axis::wavenumber);
}

double diagonalization_check(const PhysicalConfig& cfg, const TestFunction& phi,
                             ChiFamily family, const QuadratureSpec& spec) {
  SpectralTransformer tr(cfg, family, spec);
  auto base = std::make_shared<TestFunction>(phi);
  auto hphi = apply_operator(cfg, base, Op::H);
  const auto fh = tr.forward(sample(cfg, *hphi, spec));
  const auto f = tr.forward(sample(cfg, phi, spec));
  double worst = 0.0, scale = 0.0;
  for (size_t i = 0; i < f.grid.size(); ++i) {
    const double e = f.grid[i];
    worst = std::max(worst,
                     std::max(std::abs(fh.left_values[i] - e * f.left_values[i]),
                              std::abs(fh.right_values[i] - e * f.right_values[i])));
    scale = std::max(scale, std::abs(e) * std::max(std::abs(f.left_values[i]),
                                                   std::abs(f.right_values[i])));
  }
  return worst / std::max(scale, 1e-300);
}

namespace {

std::vector<double> momentum_grid(const PhysicalConfig& cfg,
                                  const QuadratureSpec& spec) {
  const double pmax = cfg.hbar * spec.k_max;
  return uniform_grid(-pmax, pmax, make_odd(2 * spec.n_k - 1));
}

}  // namespace

SampledFunction fourier(const PhysicalConfig& cfg, const SampledFunction& phi,
                        const QuadratureSpec& spec) {
  check_sampled(phi);
  const auto wx = simpson_weights(int(phi.grid.size()), phi.spacing());
  SampledFunction out;
  out.axis = Axis::momentum;
  out.grid = momentum_grid(cfg, spec);
  out.values.resize(out.grid.size());
  const double norm = 1.0 / std::sqrt(2.0 * pi * cfg.hbar);
  parallel_for(out.grid.size(), [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      const double p = out.grid[i];
      complex acc = 0.0;
      for (size_t j = 0; j < phi.grid.size(); ++j)
        acc += wx[j] * phi.values[j] * std::exp(-I * p * phi.grid[j] / cfg.hbar);
      out.values[i] = norm * acc;
    }
  });
  out.window_lo = out.grid.front();
  out.window_hi = out.grid.back();
  return out;
}

SampledFunction inverse_fourier(const PhysicalConfig& cfg,
                                const SampledFunction& phat,
                                const QuadratureSpec& spec) {
  check_sampled(phat);
  const auto wp = simpson_weights(int(phat.grid.size()), phat.spacing());
  SampledFunction out;
  out.axis = Axis::position;
  out.grid = uniform_grid(spec.x_lo, spec.x_hi, spec.n_x);
  out.values.resize(out.grid.size());
  const double norm = 1.0 / std::sqrt(2.0 * pi * cfg.hbar);
  parallel_for(out.grid.size(), [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      const double x = out.grid[i];
      complex acc = 0.0;
      for (size_t j = 0; j < phat.grid.size(); ++j)
        acc += wp[j] * phat.values[j] * std::exp(I * phat.grid[j] * x / cfg.hbar);
      out.values[i] = norm * acc;
    }
  });
  out.window_lo = spec.x_lo;
  out.window_hi = spec.x_hi;
  return out;
}

complex fourier_reconstruct_at(const PhysicalConfig& cfg,
                               const SampledFunction& phat, double x) {
  check_sampled(phat);
  const auto wp = simpson_weights(int(phat.grid.size()), phat.spacing());
  const double norm = 1.0 / std::sqrt(2.0 * pi * cfg.hbar);
  complex acc = 0.0;
  for (size_t j = 0; j < phat.grid.size(); ++j)
    acc += wp[j] * phat.values[j] * std::exp(I * phat.grid[j] * x / cfg.hbar);
  return norm * acc;
}

namespace {

complex sampled_inner(const SampledFunction& f, const SampledFunction& g) {
  const auto w = simpson_weights(int(f.grid.size()), f.spacing());
  complex acc = 0.0;
  for (size_t i = 0; i < f.grid.size(); ++i)
    acc += w[i] * std::conj(f.values[i]) * g.values[i];
  return acc;
}

complex spectral_inner(const std::vector<double>& we,
                       const TwoComponentSpectralFunction& f,
                       const TwoComponentSpectralFunction& g,
                       const std::vector<double>& moment_axis = {}, int n = 0) {
  complex acc = 0.0;
  for (size_t i = 0; i < we.size(); ++i) {
    double mom = 1.0;
    for (int j = 0; j < n; ++j) mom *= moment_axis[i];
    acc += we[i] * mom *
           (std::conj(f.left_values[i]) * g.left_values[i] +
            std::conj(f.right_values[i]) * g.right_values[i]);
  }
  return acc;
}

}  // namespace

ParsevalResult parseval_check(const PhysicalConfig& cfg,
                              const TestFunction& phi, const TestFunction& psi,
                              const QuadratureSpec& spec) {
  SpectralTransformer tr(cfg, ChiFamily::plus, spec);
  const auto sphi = sample(cfg, phi, spec);
  const auto spsi = sample(cfg, psi, spec);
  ParsevalResult r;
  r.position = sampled_inner(sphi, spsi);
  const auto fphi = tr.forward(sphi);
  const auto fpsi = tr.forward(spsi);
  r.energy = spectral_inner(tr.energy_weights(), fphi, fpsi);
  const auto hphi = fourier(cfg, sphi, spec);
  const auto hpsi = fourier(cfg, spsi, spec);
  r.momentum = sampled_inner(hphi, hpsi);
  return r;
}

MomentResult moment_check(const PhysicalConfig& cfg, const TestFunction& phi,
                          const TestFunction& psi, int n, Observable which,
                          const QuadratureSpec& spec) {
  if (n < 1 || n > 2) throw std::invalid_argument("moment_check: n in 1..2");
  MomentResult r;
  auto base = std::make_shared<TestFunction>(psi);
  WaveFnPtr acted;
  switch (which) {
    case Observable::H:
      acted = apply_word(cfg, base, 0, 0, n);
      break;
    case Observable::P:
      acted = apply_word(cfg, base, n, 0, 0);
      break;
    case Observable::Q:
      acted = apply_word(cfg, base, 0, n, 0);
      break;
  }
  const auto sphi = sample(cfg, phi, spec);
  const auto sact = sample(cfg, *acted, spec);
  r.position_side = sampled_inner(sphi, sact);

  if (which == Observable::H) {
    SpectralTransformer tr(cfg, ChiFamily::plus, spec);
    const auto fphi = tr.forward(sphi);
    const auto fpsi = tr.forward(sample(cfg, psi, spec));
    r.spectral_side =
        spectral_inner(tr.energy_weights(), fphi, fpsi, fphi.grid, n);
  } else if (which == Observable::P) {
    const auto hphi = fourier(cfg, sphi, spec);
    const auto hpsi = fourier(cfg, sample(cfg, psi, spec), spec);
    const auto wp = simpson_weights(int(hphi.grid.size()), hphi.spacing());
    complex acc = 0.0;
    for (size_t i = 0; i < hphi.grid.size(); ++i) {
      double mom = 1.0;
      for (int j = 0; j < n; ++j) mom *= hphi.grid[i];
      acc += wp[i] * mom * std::conj(hphi.values[i]) * hpsi.values[i];
    }
    r.spectral_side = acc;
  } else {
    // position is the diagonalizing representation for Q
    const auto spsi = sample(cfg, psi, spec);
    const auto wx = simpson_weights(int(sphi.grid.size()), sphi.spacing());
    complex acc = 0.0;
    for (size_t i = 0; i < sphi.grid.size(); ++i) {
      double mom = 1.0;
      for (int j = 0; j < n; ++j) mom *= sphi.grid[i];
      acc += wx[i] * mom * std::conj(sphi.values[i]) * spsi.values[i];
    }
    r.spectral_side = acc;
  }
  return r;
}

complex reconstruct_at(const PhysicalConfig& cfg, const TestFunction& phi,
                       double x, ChiFamily family, const QuadratureSpec& spec) {
  SpectralTransformer tr(cfg, family, spec);
  const auto f = tr.forward(sample(cfg, phi, spec));
  return tr.reconstruct_at(f, x);
}

double l2_norm(const SampledFunction& f) {
  const auto w = simpson_weights(int(f.grid.size()), f.spacing());
  double acc = 0.0;
  for (size_t i = 0; i < f.grid.size(); ++i)
    acc += w[i] * std::norm(f.values[i]);
  return std::sqrt(acc);
}

double l2_distance(const SampledFunction& f, const SampledFunction& g) {
  const auto w = simpson_weights(int(f.grid.size()), f.spacing());
  double acc = 0.0;
  for (size_t i = 0; i < f.grid.size(); ++i)
    acc += w[i] * std::norm(f.values[i] - g.values[i]);
  return std::sqrt(acc);
}

double l2_norm_spectral(const PhysicalConfig& cfg,
                        const TwoComponentSpectralFunction& f) {
  const double h = f.k_grid[1] - f.k_grid[0];
  const auto wk = simpson_weights(int(f.k_grid.size()), h);
  const double jac = cfg.hbar * cfg.hbar / cfg.m;
  double acc = 0.0;
  for (size_t i = 0; i < f.k_grid.size(); ++i) {
    double w = wk[i];
    if (f.axis == Axis::energy) w *= jac * f.k_grid[i];
    acc += w * (std::norm(f.left_values[i]) + std::norm(f.right_values[i]));
  }
  return std::sqrt(acc);
}

}  // namespace barrier
