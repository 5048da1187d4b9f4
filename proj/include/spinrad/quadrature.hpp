#pragma once

#include <functional>
#include <span>

namespace spinrad::quadrature {

struct Options {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;   // extra absolute floor; 0 disables
  int max_panels = 4000;
  // Floor against endless refinement when the integral nearly cancels:
  // the effective bound is max(abs_tol, rel_tol*|I|, rel_tol*scale_floor*L1)
  // with L1 the sum of |panel integrals|.
  double scale_floor = 0.02;
};

struct Outcome {
  double value = 0.0;
  double abs_error = 0.0;
  int panels = 0;
  bool converged = false;
};

/// Globally adaptive Gauss–Kronrod 7/15 over the union of seed panels
/// [edges[0],edges[1]], [edges[1],edges[2]], ... The worst panel is bisected
/// until the summed error estimate meets the bound. Nodes are interior, so f
/// is never evaluated at panel edges.
Outcome integrate(const std::function<double(double)>& f,
                  std::span<const double> edges, const Options& opt);

/// Same, but throws NumericalError (carrying the best estimate) if the panel
/// budget is exhausted before convergence.
Outcome integrate_or_throw(const std::function<double(double)>& f,
                           std::span<const double> edges, const Options& opt,
                           const char* context);

}  // namespace spinrad::quadrature
