#ifndef BARRIER_EIGENFUNCTIONS_HPP
#define BARRIER_EIGENFUNCTIONS_HPP

#include <functional>
#include <utility>

#include "barrier/coefficients.hpp"
#include "barrier/core.hpp"

namespace barrier {

enum class ChiFamily { plus, minus, tilde };
enum class Side { left, right };

struct EigenfunctionId {
  ChiFamily family = ChiFamily::plus;
  Side side = Side::left;
  EnergyPoint ep;
};

// Piecewise eigensolution with its coefficients evaluated once, so sweeping
// x is cheap. Derivatives come from the analytic exponential pieces.
class ChiEvaluator {
 public:
  ChiEvaluator(const PhysicalConfig& cfg, ChiFamily family,
               const EnergyPoint& ep);

  complex value(Side side, double x) const;
  complex derivative(Side side, double x) const;
  std::pair<complex, complex> value_and_derivative(Side side, double x) const;

  // evaluate one specific piece (0 exterior-left, 1 interior, 2
  // exterior-right), even outside its region; used by matching checks
  std::pair<complex, complex> piece(Side side, int region, double x) const;

  const CoefficientSet& coefficients() const { return cs_; }
  complex prefactor() const { return pref_; }

 private:
  double a_, b_;
  complex keff_, qeff_;
  complex pref_;
  CoefficientSet cs_;
};

complex chi(const PhysicalConfig& cfg, const EigenfunctionId& id, double x);
complex chi_derivative(const PhysicalConfig& cfg, const EigenfunctionId& id,
                       double x);
complex chi_tilde(const PhysicalConfig& cfg, Side side, const EnergyPoint& ep,
                  double x);
complex plane_wave(const PhysicalConfig& cfg, double x, double p);
complex k_normalized_chi(const PhysicalConfig& cfg, const EigenfunctionId& id,
                         double x);

using DifferentiableFn = std::function<std::pair<complex, complex>(double)>;

// f(x) g'(x) - f'(x) g(x)
complex wronskian(const DifferentiableFn& f, const DifferentiableFn& g,
                  double x);

DifferentiableFn chi_fn(const PhysicalConfig& cfg, ChiFamily family, Side side,
                        const EnergyPoint& ep);

}  // namespace barrier

#endif
