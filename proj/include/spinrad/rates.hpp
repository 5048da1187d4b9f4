#pragma once

#include <vector>

#include "spinrad/kernels.hpp"
#include "spinrad/material.hpp"

namespace spinrad {

/// Full physical scenario: particle, plate, separation, spin, temperatures.
struct SystemConfig {
  Material material;
  PlateOptics plate;
  double z0 = 0.0;         // cm
  double omega_rot = 0.0;  // 1/s
  ThermalState thermal;

  void validate() const;  // z0 > 0, omega_rot >= 0, parts valid
};

/// Closed-form rates bundle. balance_residual checks the energy split
/// -Mz Omega = I + dQ'/dt, which the closed forms satisfy identically;
/// anything above ~1e-14 indicates a programming error, not physics.
struct RateReport {
  double intensity = 0.0;         // erg/s
  double torque = 0.0;            // erg
  double heating = 0.0;           // erg/s
  double balance_residual = 0.0;  // |{-Mz Om - I - dQ'} / max member|
  double x_small_parameter = 0.0; // closed forms assume this << 1
};

struct SpectralSample {
  double omega = 0.0;            // 1/s
  double integrand_value = 0.0;  // erg (per unit omega)
};

/// n z0 max(Omega, theta1, theta2) / c. The closed forms drop the
/// exp(-2 q0 z0) factor; above ~0.1 they should not be trusted.
double x_small_parameter(const SystemConfig& config);

/// Closed finite-temperature rates through the kernel value at x = 0.
/// Temperatures enter as theta = 2 pi k_B T/hbar; the brackets are
///   I:  (th1^6 - th2^6)/126 + Om^2 th1^4/10 + Om^4 th1^2/6 + Om^6/15
///   Mz: -[(3 th1^4 + th2^4) Om/30 + th1^2 Om^3/3 + Om^5/5]
///   Q': (th2^6 - th1^6)/126 + Om^2 th2^4/30 + Om^4 th1^2/6 + 2 Om^6/15
/// times hbar A_s R^3 |psi_s(n,0)| / (2 pi c^3), summed over the channels
/// present on the material.
double intensity_closed(const SystemConfig& config);
double torque_closed(const SystemConfig& config);
double heating_closed(const SystemConfig& config);
RateReport rate_report(const SystemConfig& config);

/// Precomputed channel prefactors for sweeps over (theta1, theta2, Omega)
/// at fixed material/plate; the kernel at x = 0 is evaluated once.
class ClosedRates {
 public:
  ClosedRates(const Material& material, const PlateOptics& plate,
              double kernel_rel_tol = 1e-9);

  double intensity(double theta1, double theta2, double omega) const;
  double torque(double theta1, double theta2, double omega) const;
  double heating(double theta1, double theta2, double omega) const;

  /// hbar A R^3 |psi(n,0)| / (2 pi c^3), summed channels / electric only.
  double prefactor() const { return prefactor_total_; }
  double prefactor_electric() const { return prefactor_e_; }

  static double intensity_bracket(double theta1, double theta2, double omega);
  static double torque_bracket(double theta1, double theta2, double omega);
  static double heating_bracket(double theta1, double theta2, double omega);

 private:
  double prefactor_e_ = 0.0;
  double prefactor_m_ = 0.0;
  double prefactor_total_ = 0.0;
};

/// Zero-temperature rates by direct quadrature of the branch-cut form:
///   I0 = -(hbar/pi c^3) Int_0^Om dw w^4 sum_s alpha''_s(Om-w) psi_s(n, w z0/c)
///   Mz = (2 hbar/pi c^3) Int_0^Om dw w^3 sum_s alpha''_s(Om-w) psi_s(n, w z0/c)
/// Omega = 0 gives exactly zero (empty range).
double intensity_zero_t(const SystemConfig& config, double rel_tol = 1e-8);
double torque_zero_t(const SystemConfig& config, double rel_tol = 1e-8);

/// Finite-temperature spectral evaluators: the rotational (perpendicular
/// dipole) channel folded onto the positive frequency axis. The fold's sign
/// is anchored to the zero-temperature forms above; at equal temperatures it
/// reproduces the closed forms, making these independent validation routes.
/// Integration is truncated at 40 max(theta1, theta2, Omega) where the coth
/// factors are dead.
double spectral_rate_rotational(const SystemConfig& config,
                                double rel_tol = 1e-8);
double spectral_torque_rotational(const SystemConfig& config,
                                  double rel_tol = 1e-8);

/// Distance-channel (z dipole) heat exchange through the chi kernel;
/// independent of Omega, vanishes at T1 = T2, drives T1 toward T2.
/// Experimental: not part of the closed-form energy balance.
double heat_exchange_z(const SystemConfig& config, double rel_tol = 1e-8);

/// Integrand of spectral_rate_rotational at a given omega (diagnostics).
SpectralSample spectral_intensity_sample(const SystemConfig& config,
                                         double omega,
                                         double kernel_rel_tol = 1e-8);

}  // namespace spinrad
