#pragma once

#include <vector>

#include "spinrad/rates.hpp"

namespace spinrad {

/// Root of the heating bracket: the particle temperature (as theta1) at which
/// the internal heating rate vanishes for given environment and spin.
struct EquilibriumResult {
  double theta1_star = 0.0;   // 1/s
  double t1_star = 0.0;       // K
  double intensity_eq = 0.0;  // erg/s, filled when solved from a SystemConfig
  int iterations = 0;
  double residual = 0.0;      // |heating bracket at root| / largest term
};

/// Solve (th2^6 - th1^6)/126 + Om^2 th2^4/30 + Om^4 th1^2/6 + 2 Om^6/15 = 0
/// for th1. The bracket is positive at th1 = th2 and strictly decreasing
/// beyond 7^(1/4) Omega, so exactly one root exists above th2; it is located
/// by doubling and polished by safeguarded bisection/secant to machine
/// precision. Omega = 0 returns th2 exactly. Both inputs zero is degenerate.
/// intensity_eq is left at zero (no radiative prefactor context here).
EquilibriumResult equilibrium_theta(double theta2, double omega_rot);

/// Same root for the config's (T2, Omega), with intensity_eq evaluated from
/// the closed form at the equilibrium temperature. The config's T1 is ignored.
EquilibriumResult solve_equilibrium(const SystemConfig& config,
                                    double kernel_rel_tol = 1e-9);

/// Intensity normalization hbar A_e R^3 |psi_e(n,0)| theta2^6 / (2 pi c^3),
/// in watts (electric channel).
double i0_factor(const Material& material, double refractive_index, double t2,
                 double rel_tol = 1e-8);

struct CurvePoint {
  double omega_over_theta2 = 0.0;
  double intensity_over_i0 = 0.0;
  double t1_over_t2 = 0.0;
};

enum class CurveMode { equilibrium, fixed_t1_equals_t2 };

/// Normalized intensity and equilibrium temperature along a grid of
/// Omega/theta2. In equilibrium mode T1 tracks the heating root; in fixed
/// mode T1 = T2. Normalization uses the electric-channel I0 above.
std::vector<CurvePoint> normalized_curve(double refractive_index,
                                         const Material& material, double t2,
                                         const std::vector<double>& omega_grid,
                                         CurveMode mode,
                                         double rel_tol = 1e-8);

/// Default curve grid: 200 log-spaced points over Omega/theta2 in [1e-2, 1e2].
std::vector<double> default_curve_grid();

struct TableMatrix {
  std::vector<double> t2_kelvin;             // rows
  std::vector<double> n_values;              // columns
  std::vector<std::vector<double>> i0_watt;  // [row][col]
};

/// I0 matrix over (T2, n) for one material and radius.
TableMatrix table_repro(const Material& material,
                        const std::vector<double>& n_list,
                        const std::vector<double>& t2_list,
                        double rel_tol = 1e-8);

}  // namespace spinrad
