#pragma once

#include <optional>
#include <string>

namespace spinrad {

enum class Channel { electric, magnetic };

/// Small-particle dipole response in the low-frequency regime,
/// alpha''_s(omega) = R^3 * A_s * omega. The electric slope A_e is mandatory;
/// a magnetic slope may be supplied for conductive particles. For a Drude
/// conductor the electric slope follows from the static conductivity,
/// A = 3/(4 pi sigma0).
struct Material {
  std::string name;
  double radius = 0.0;                    // cm
  double slope_e = 0.0;                   // s
  std::optional<double> slope_m;          // s
  std::optional<double> conductivity;     // 1/s, Drude source of slope_e

  /// Build from a static conductivity (Drude form eps = 1 + i 4 pi sigma0/omega).
  static Material drude(std::string name, double radius_cm, double sigma0);

  /// Named presets: "SiO2" (A = 3.6e-15 s) and "graphite" (A = 1.15e-15 s).
  static Material preset(const std::string& name, double radius_cm);

  bool has_channel(Channel s) const {
    return s == Channel::electric || slope_m.has_value();
  }
  double slope(Channel s) const;

  /// Throws if radius/slopes are out of domain or the Drude consistency
  /// relation is violated.
  void validate() const;
};

struct ThermalState {
  double t_particle = 0.0;     // K, T1
  double t_environment = 0.0;  // K, T2

  void validate() const;
};

/// Temperature expressed as an angular frequency, theta = 2 pi k_B T / hbar.
double thermal_frequency(double temperature_kelvin);

/// Imaginary part of the polarizability, R^3 A_s omega (cm^3). Odd in omega.
double alpha_im(const Material& material, double omega, Channel channel);

/// Point-dipole validity report for the three conditions
///   R << z0,   Omega R / c << 1,   R << min(2 pi hbar c / k_B T_{1,2}).
/// "<<" is operationalized as ratio < 0.1; the margins are reported rather
/// than hidden. A zero temperature makes the thermal condition vacuous.
struct ValidityCondition {
  double ratio = 0.0;
  bool pass = true;
};

struct ValidityReport {
  ValidityCondition size_vs_distance;   // R / z0
  ValidityCondition rotation_speed;     // Omega R / c
  ValidityCondition thermal_wavelength; // R k_B max(T1,T2) / (2 pi hbar c)

  bool all_pass() const {
    return size_vs_distance.pass && rotation_speed.pass &&
           thermal_wavelength.pass;
  }
};

ValidityReport validity_check(const Material& material, double z0,
                              double omega_rot, const ThermalState& thermal);

}  // namespace spinrad
