#include "barrier/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "barrier/errors.hpp"

namespace barrier {

static GLRule build_gl(int n) {
  GLRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n(x) = 0.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one polishing pass after convergence
        if (it > 0) break;
      }
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

const GLRule& gauss_legendre(int n) {
  static std::map<int, GLRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gl(n)).first;
  return it->second;
}

complex integrate_gl(const std::function<complex(double)>& f, double lo,
                     double hi, int n) {
  const GLRule& rule = gauss_legendre(n);
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  complex acc = 0.0;
  for (int i = 0; i < n; ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * acc;
}

static complex adapt(const std::function<complex(double)>& f, double lo,
                     double hi, double abs_tol, double rel_tol, int depth,
                     int max_depth, double global_scale) {
  const complex coarse = integrate_gl(f, lo, hi, 15);
  const complex fine = integrate_gl(f, lo, hi, 31);
  const double err = std::abs(fine - coarse);
  const double tol =
      std::max(abs_tol, rel_tol * std::max(std::abs(fine), global_scale));
  if (err <= tol || depth >= max_depth) {
    if (err > tol)
      throw QuadratureFailure("adaptive quadrature: depth limit reached");
    return fine;
  }
  const double mid = 0.5 * (lo + hi);
  return adapt(f, lo, mid, 0.5 * abs_tol, rel_tol, depth + 1, max_depth,
               global_scale) +
         adapt(f, mid, hi, 0.5 * abs_tol, rel_tol, depth + 1, max_depth,
               global_scale);
}

complex integrate_adaptive(const std::function<complex(double)>& f, double lo,
                           double hi, double abs_tol, double rel_tol,
                           int max_depth) {
  if (lo == hi) return 0.0;
  return adapt(f, lo, hi, abs_tol, rel_tol, 0, max_depth, 0.0);
}

complex integrate_adaptive_split(const std::function<complex(double)>& f,
                                 double lo, double hi,
                                 const std::vector<double>& breaks,
                                 double abs_tol, double rel_tol) {
  std::vector<double> pts;
  pts.push_back(lo);
  for (double p : breaks)
    if (p > lo && p < hi) pts.push_back(p);
  pts.push_back(hi);
  std::sort(pts.begin(), pts.end());
  complex acc = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    acc += integrate_adaptive(f, pts[i], pts[i + 1], abs_tol, rel_tol);
  return acc;
}

std::vector<double> simpson_weights(int n_nodes, double h) {
  if (n_nodes < 3 || n_nodes % 2 == 0)
    throw QuadratureFailure("simpson_weights: need an odd node count >= 3");
  std::vector<double> w(n_nodes, 0.0);
  for (int i = 0; i + 2 < n_nodes; i += 2) {
    w[i] += h / 3.0;
    w[i + 1] += 4.0 * h / 3.0;
    w[i + 2] += h / 3.0;
  }
  return w;
}

}  // namespace barrier
