#pragma once

#include <utility>
#include <vector>

#include "spinrad/rates.hpp"

namespace spinrad {

/// Heat capacity, either a constant or a tabulated function of temperature
/// (piecewise-linear, clamped outside the table).
class HeatCapacity {
 public:
  explicit HeatCapacity(double constant_erg_per_k);
  explicit HeatCapacity(std::vector<std::pair<double, double>> table);

  double at(double t_kelvin) const;
  void validate() const;

 private:
  double constant_ = 0.0;
  std::vector<std::pair<double, double>> table_;  // (T, C) sorted by T
};

struct BodyProperties {
  double moment_of_inertia = 0.0;  // g cm^2
  HeatCapacity heat_capacity{1.0};

  void validate() const;

  /// Solid sphere of the material's radius: I = (8/15) pi rho R^5 and a
  /// constant volumetric heat capacity (erg per K per cm^3).
  static BodyProperties solid_sphere(const Material& material,
                                     double density_g_cm3,
                                     double specific_heat_erg_g_k);
};

struct RotationState {
  double time = 0.0;        // s
  double omega = 0.0;       // 1/s
  double t_particle = 0.0;  // K
};

struct TrajectoryPoint {
  double time = 0.0;
  double omega = 0.0;
  double t_particle = 0.0;
  double intensity = 0.0;       // erg/s
  double kinetic_energy = 0.0;  // erg
};

struct StepResult {
  RotationState state;
  double err_omega = 0.0;       // embedded-pair error estimates
  double err_t_particle = 0.0;
};

/// One embedded Dormand-Prince 5(4) step of
///   dOmega/dt = Mz(Omega, T1, T2) / I,
///   C(T1) dT1/dt = dQ'/dt(Omega, T1, T2),
/// using the closed-form rates (quasi-static force law). Deterministic.
/// T2 and the radiative prefactors come from config; T1 and Omega from state.
StepResult step(const SystemConfig& config, const BodyProperties& body,
                const RotationState& state, double dt);

/// Integrate from (config.omega_rot, config.thermal.t_particle) to t_end with
/// adaptive local error <= rel_tol per component, sampling the output at the
/// fixed stride (decoupled from the internal steps; steps are clamped to land
/// on sample times).
std::vector<TrajectoryPoint> evolve(const SystemConfig& config,
                                    const BodyProperties& body, double t_end,
                                    double output_stride,
                                    double rel_tol = 1e-8);

}  // namespace spinrad
