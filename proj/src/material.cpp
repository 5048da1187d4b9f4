#include "spinrad/material.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "spinrad/constants.hpp"
#include "spinrad/errors.hpp"

namespace spinrad {

namespace {
constexpr double pi = std::numbers::pi;
}

Material Material::drude(std::string name, double radius_cm, double sigma0) {
  if (sigma0 <= 0.0) {
    throw std::domain_error("drude material: conductivity must be positive");
  }
  Material m;
  m.name = std::move(name);
  m.radius = radius_cm;
  m.slope_e = 3.0 / (4.0 * pi * sigma0);
  m.conductivity = sigma0;
  m.validate();
  return m;
}

Material Material::preset(const std::string& name, double radius_cm) {
  Material m;
  m.name = name;
  m.radius = radius_cm;
  if (name == "SiO2") {
    m.slope_e = 3.6e-15;
  } else if (name == "graphite") {
    // Published low-frequency slope for graphite. Deriving it from the static
    // conductivity 2.07e14 1/s gives 1.1533e-15 s; the quoted rounded value is
    // kept so intensity ratios against SiO2 come out at 0.3194.
    m.slope_e = 1.15e-15;
  } else {
    throw ConfigError("unknown material preset '" + name +
                      "' (known: SiO2, graphite)");
  }
  m.validate();
  return m;
}

double Material::slope(Channel s) const {
  if (s == Channel::electric) return slope_e;
  if (!slope_m.has_value()) {
    throw ConfigError("material '" + name +
                      "' has no magnetic polarizability slope");
  }
  return *slope_m;
}

void Material::validate() const {
  if (!(radius > 0.0)) {
    throw std::domain_error("material radius must be positive");
  }
  if (!(slope_e > 0.0)) {
    throw std::domain_error("material electric slope must be positive");
  }
  if (slope_m && !(*slope_m > 0.0)) {
    throw std::domain_error("material magnetic slope must be positive");
  }
  if (conductivity) {
    const double expected = 3.0 / (4.0 * pi * *conductivity);
    if (std::abs(slope_e - expected) > 1e-12 * expected) {
      throw std::domain_error(
          "material slope_e inconsistent with conductivity (expected "
          "3/(4 pi sigma0))");
    }
  }
}

void ThermalState::validate() const {
  if (t_particle < 0.0 || t_environment < 0.0) {
    throw std::domain_error("temperatures must be non-negative");
  }
}

double thermal_frequency(double temperature_kelvin) {
  if (temperature_kelvin < 0.0) {
    throw std::domain_error("thermal_frequency: temperature must be >= 0");
  }
  return 2.0 * pi * cgs::k_boltzmann * temperature_kelvin / cgs::hbar;
}

double alpha_im(const Material& material, double omega, Channel channel) {
  const double a = material.slope(channel);
  const double r3 = material.radius * material.radius * material.radius;
  return r3 * a * omega;
}

ValidityReport validity_check(const Material& material, double z0,
                              double omega_rot, const ThermalState& thermal) {
  material.validate();
  thermal.validate();
  if (z0 < 0.0 || omega_rot < 0.0) {
    throw std::domain_error("validity_check: z0 and omega must be >= 0");
  }

  constexpr double much_less = 0.1;
  ValidityReport rep;

  rep.size_vs_distance.ratio = (z0 > 0.0)
      ? material.radius / z0
      : std::numeric_limits<double>::infinity();
  rep.rotation_speed.ratio = omega_rot * material.radius / cgs::c_light;

  // Thermal wavelength 2 pi hbar c / (k_B T); both temperatures are checked
  // and the worse margin reported. T = 0 means an infinite wavelength.
  const double t_worst = std::max(thermal.t_particle, thermal.t_environment);
  rep.thermal_wavelength.ratio =
      material.radius * cgs::k_boltzmann * t_worst /
      (2.0 * pi * cgs::hbar * cgs::c_light);

  rep.size_vs_distance.pass = rep.size_vs_distance.ratio < much_less;
  rep.rotation_speed.pass = rep.rotation_speed.ratio < much_less;
  rep.thermal_wavelength.pass = rep.thermal_wavelength.ratio < much_less;
  return rep;
}

}  // namespace spinrad
