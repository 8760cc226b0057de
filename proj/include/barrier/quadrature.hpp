#ifndef BARRIER_QUADRATURE_HPP
#define BARRIER_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "barrier/core.hpp"

namespace barrier {

// Gauss-Legendre nodes/weights on (-1, 1), computed once per order by Newton
// iteration on the Legendre recurrence and cached.
struct GLRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GLRule& gauss_legendre(int n);

complex integrate_gl(const std::function<complex(double)>& f, double lo,
                     double hi, int n);

// Adaptive bisection; each panel compared at orders 15 and 31. Throws
// QuadratureFailure when the recursion depth limit is hit.
complex integrate_adaptive(const std::function<complex(double)>& f, double lo,
                           double hi, double abs_tol = 1e-9,
                           double rel_tol = 1e-8, int max_depth = 28);

// Same, but splits the interval at the given interior breakpoints first
// (kernel kinks, potential edges).
complex integrate_adaptive_split(const std::function<complex(double)>& f,
                                 double lo, double hi,
                                 const std::vector<double>& breaks,
                                 double abs_tol = 1e-9, double rel_tol = 1e-8);

// Composite Simpson weights for a uniform grid with an odd number of nodes.
std::vector<double> simpson_weights(int n_nodes, double h);

}  // namespace barrier

#endif
