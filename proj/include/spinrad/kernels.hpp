#pragma once

#include <complex>
#include <numbers>

#include "spinrad/material.hpp"

namespace spinrad {

/// Transparent, lossless dielectric half-space.
struct PlateOptics {
  double refractive_index = 1.0;  // n >= 1, real

  void validate() const;
};

/// Dimensionless integration point of the branch-cut kernels:
/// t = k c / omega (scaled transverse wavevector), x = omega z0 / c.
struct ScaledWavevector {
  double t = 0.0;
  double x = 0.0;
};

/// Scaled normal-wavevector roots and Fresnel-type reflection factors at a
/// point t. Roots use the principal complex square root: real positive for
/// t above the branch point, +i sqrt(|.|) below it. That branch makes
/// psi_e(n,0) negative and the radiated intensity positive; it is asserted
/// by branch_self_test().
struct ReflectionFactors {
  std::complex<double> q0;       // sqrt(t^2 - 1)
  std::complex<double> q;        // sqrt(t^2 - n^2)
  std::complex<double> delta_e;  // (n^2 q0 - q)/(n^2 q0 + q)
  std::complex<double> delta_m;  // (q0 - q)/(q0 + q)
  std::complex<double> r_e;      // (t^2 - 1) delta_e + delta_m
  std::complex<double> r_m;      // (t^2 - 1) delta_m + delta_e
};

ReflectionFactors reflection_factors(double n, double t);

/// Kernel integral result with its quadrature error estimate. On success the
/// estimate is below the effective tolerance (relative, with a small floor on
/// the integrand's L1 scale for nearly cancelling oscillatory values).
struct KernelValue {
  double value = 0.0;
  double abs_error_estimate = 0.0;
};

/// Kernel values are quoted in the response normalization under which the
/// built-in reference intensity table is expressed: the bare branch-cut
/// integral of the reflection-factor form divided by this constant. The bare
/// integrand is available through psi_integrand / chi_integrand.
inline constexpr double kernel_response_norm =
    4.0 * std::numbers::pi * std::numbers::sqrt2;

/// Surface response kernels over t in [0, n]. The t < 1 band is oscillatory
/// in x (propagating waves); 1 < t < n is the frustrated-internal-reflection
/// band; t > n contributes nothing (all factors real). The integrable
/// 1/sqrt(t^2-1) singularity at t = 1 and the sqrt kink at t = n are removed
/// by the substitutions u = sqrt(1-t^2), w = sqrt(t^2-1), v = sqrt(n^2-t^2).
///
/// psi_e(n, x) < 0 at small x for all n > 1; both kernels vanish identically
/// at n = 1. rel_tol must lie in (0, 1e-4].
KernelValue psi_e(double n, double x, double rel_tol = 1e-8);
KernelValue psi_m(double n, double x, double rel_tol = 1e-8);

/// z-channel kernel over t^3 Delta_s (experimental; exercised only by the
/// distance-independent heat-exchange estimator).
KernelValue chi_kernel(double n, double x, Channel channel,
                       double rel_tol = 1e-8);

/// Bare integrands in the physical t variable (complex route, unnormalized);
/// diagnostic and test surface. Singular at t = 1; identically zero for t > n.
double psi_integrand(double n, ScaledWavevector point, Channel channel);
double chi_integrand(double n, ScaledWavevector point, Channel channel);

/// Asserts the branch choice above at (n=3, x=0); throws std::logic_error if
/// the sign convention is broken. Cheap; intended to run at program start.
void branch_self_test();

}  // namespace spinrad
