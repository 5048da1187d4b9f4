#include "spinrad/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <vector>

#include "spinrad/constants.hpp"
#include "spinrad/quadrature.hpp"

namespace spinrad {

namespace {

constexpr double pi = std::numbers::pi;

// u * coth(pi u / theta), the stable combination the linear-polarizability
// integrands reduce to. Even in u; theta = 0 degenerates to |u|.
double ucoth(double u, double theta) {
  if (theta == 0.0) return std::abs(u);
  const double z = pi * u / theta;
  const double az = std::abs(z);
  if (az < 1e-4) {
    // u/z + u z/3 = theta/pi + pi u^2/(3 theta)
    return theta / pi + pi * u * u / (3.0 * theta);
  }
  return u / std::tanh(z);
}

double kernel_tol_for(double rel_tol) {
  return std::clamp(rel_tol * 1e-2, 1e-12, 1e-6);
}

// Channel sum of A_s R^3 psi_s(n, x); psi evaluated at x = 0 once when the
// whole frequency range keeps x below resolution.
struct ChannelWeights {
  const Material& material;
  double n;
  double z0_over_c;
  double kernel_tol;
  bool frozen_at_zero;
  double frozen_e = 0.0, frozen_m = 0.0;

  ChannelWeights(const SystemConfig& cfg, double omega_max, double ktol)
      : material(cfg.material),
        n(cfg.plate.refractive_index),
        z0_over_c(cfg.z0 / cgs::c_light),
        kernel_tol(ktol),
        frozen_at_zero(omega_max * z0_over_c < 1e-10) {
    if (frozen_at_zero) {
      frozen_e = psi_e(n, 0.0, kernel_tol).value;
      if (material.slope_m) frozen_m = psi_m(n, 0.0, kernel_tol).value;
    }
  }

  // sum_s A_s R^3 psi_s(n, omega z0/c)
  double psi_weighted(double omega) const {
    const double r3 = std::pow(material.radius, 3);
    double acc = 0.0;
    if (frozen_at_zero) {
      acc = material.slope_e * frozen_e;
      if (material.slope_m) acc += *material.slope_m * frozen_m;
    } else {
      const double x = omega * z0_over_c;
      acc = material.slope_e * psi_e(n, x, kernel_tol).value;
      if (material.slope_m) {
        acc += *material.slope_m * psi_m(n, x, kernel_tol).value;
      }
    }
    return acc * r3;
  }
};

std::vector<double> spectral_edges(double omega_rot, double theta_max,
                                   double omega_max) {
  std::set<double> e{0.0, omega_max};
  auto add = [&](double v) {
    if (v > 0.0 && v < omega_max) e.insert(v);
  };
  add(0.5 * omega_rot);
  add(omega_rot);
  if (theta_max > 0.0) {
    add(omega_rot + theta_max);
    add(omega_rot + 5.0 * theta_max);
    add(omega_rot + 15.0 * theta_max);
  }
  return {e.begin(), e.end()};
}

}  // namespace

void SystemConfig::validate() const {
  material.validate();
  plate.validate();
  thermal.validate();
  if (!(z0 > 0.0)) throw std::domain_error("config: z0 must be positive");
  if (omega_rot < 0.0) throw std::domain_error("config: omega must be >= 0");
}

double x_small_parameter(const SystemConfig& config) {
  const double th1 = thermal_frequency(config.thermal.t_particle);
  const double th2 = thermal_frequency(config.thermal.t_environment);
  const double scale = std::max({config.omega_rot, th1, th2});
  return config.plate.refractive_index * config.z0 * scale / cgs::c_light;
}

double ClosedRates::intensity_bracket(double th1, double th2, double om) {
  const double t12 = th1 * th1, t22 = th2 * th2, o2 = om * om;
  const double t16 = t12 * t12 * t12, t26 = t22 * t22 * t22;
  return (t16 - t26) / 126.0 + o2 * t12 * t12 / 10.0 + o2 * o2 * t12 / 6.0 +
         o2 * o2 * o2 / 15.0;
}

double ClosedRates::torque_bracket(double th1, double th2, double om) {
  const double t12 = th1 * th1, t22 = th2 * th2, o2 = om * om;
  return (3.0 * t12 * t12 + t22 * t22) * om / 30.0 + t12 * o2 * om / 3.0 +
         o2 * o2 * om / 5.0;
}

double ClosedRates::heating_bracket(double th1, double th2, double om) {
  const double t12 = th1 * th1, t22 = th2 * th2, o2 = om * om;
  const double t16 = t12 * t12 * t12, t26 = t22 * t22 * t22;
  return (t26 - t16) / 126.0 + o2 * t22 * t22 / 30.0 + o2 * o2 * t12 / 6.0 +
         2.0 * o2 * o2 * o2 / 15.0;
}

ClosedRates::ClosedRates(const Material& material, const PlateOptics& plate,
                         double kernel_rel_tol) {
  material.validate();
  plate.validate();
  const double tol = std::clamp(kernel_rel_tol, 1e-12, 1e-4);
  const double n = plate.refractive_index;
  const double r3 = std::pow(material.radius, 3);
  const double base = cgs::hbar * r3 / (2.0 * pi * std::pow(cgs::c_light, 3));

  prefactor_e_ = -base * material.slope_e * psi_e(n, 0.0, tol).value;
  prefactor_m_ = material.slope_m
                     ? -base * *material.slope_m * psi_m(n, 0.0, tol).value
                     : 0.0;
  prefactor_total_ = prefactor_e_ + prefactor_m_;
}

double ClosedRates::intensity(double th1, double th2, double om) const {
  return prefactor_total_ * intensity_bracket(th1, th2, om);
}

double ClosedRates::torque(double th1, double th2, double om) const {
  return -prefactor_total_ * torque_bracket(th1, th2, om);
}

double ClosedRates::heating(double th1, double th2, double om) const {
  return prefactor_total_ * heating_bracket(th1, th2, om);
}

double intensity_closed(const SystemConfig& config) {
  config.validate();
  const ClosedRates cr(config.material, config.plate);
  return cr.intensity(thermal_frequency(config.thermal.t_particle),
                      thermal_frequency(config.thermal.t_environment),
                      config.omega_rot);
}

double torque_closed(const SystemConfig& config) {
  config.validate();
  const ClosedRates cr(config.material, config.plate);
  return cr.torque(thermal_frequency(config.thermal.t_particle),
                   thermal_frequency(config.thermal.t_environment),
                   config.omega_rot);
}

double heating_closed(const SystemConfig& config) {
  config.validate();
  const ClosedRates cr(config.material, config.plate);
  return cr.heating(thermal_frequency(config.thermal.t_particle),
                    thermal_frequency(config.thermal.t_environment),
                    config.omega_rot);
}

RateReport rate_report(const SystemConfig& config) {
  config.validate();
  const ClosedRates cr(config.material, config.plate);
  const double th1 = thermal_frequency(config.thermal.t_particle);
  const double th2 = thermal_frequency(config.thermal.t_environment);
  const double om = config.omega_rot;

  RateReport rep;
  rep.intensity = cr.intensity(th1, th2, om);
  rep.torque = cr.torque(th1, th2, om);
  rep.heating = cr.heating(th1, th2, om);
  const double sum = -rep.torque * om - rep.intensity - rep.heating;
  const double scale = std::max(
      {std::abs(rep.torque * om), std::abs(rep.intensity),
       std::abs(rep.heating)});
  rep.balance_residual = scale > 0.0 ? std::abs(sum) / scale : 0.0;
  rep.x_small_parameter = x_small_parameter(config);
  return rep;
}

// ---------------------------------------------------------------------------
// Zero-temperature quadratures
// ---------------------------------------------------------------------------

namespace {

double zero_t_moment(const SystemConfig& config, double rel_tol, int power,
                     double coefficient, const char* context) {
  config.validate();
  const double om = config.omega_rot;
  if (om == 0.0) return 0.0;

  const ChannelWeights weights(config, om, kernel_tol_for(rel_tol));

  // alpha''_s(Om - w) = A_s R^3 (Om - w); psi carried per channel
  auto f = [&](double w) {
    return std::pow(w, power) * weights.psi_weighted(w) * (om - w);
  };

  quadrature::Options opt;
  opt.rel_tol = rel_tol;
  const std::vector<double> edges{0.0, 0.5 * om, om};
  const auto out = quadrature::integrate_or_throw(f, edges, opt, context);
  return coefficient * cgs::hbar / (pi * std::pow(cgs::c_light, 3)) * out.value;
}

}  // namespace

double intensity_zero_t(const SystemConfig& config, double rel_tol) {
  return zero_t_moment(config, rel_tol, 4, -1.0, "intensity_zero_t");
}

double torque_zero_t(const SystemConfig& config, double rel_tol) {
  return zero_t_moment(config, rel_tol, 3, 2.0, "torque_zero_t");
}

// ---------------------------------------------------------------------------
// Spectral (finite-temperature) evaluators
// ---------------------------------------------------------------------------

namespace {

struct SpectralSetup {
  double th1, th2, om, omega_max;
  std::vector<double> edges;

  explicit SpectralSetup(const SystemConfig& config) {
    config.validate();
    th1 = thermal_frequency(config.thermal.t_particle);
    th2 = thermal_frequency(config.thermal.t_environment);
    om = config.omega_rot;
    const double theta_max = std::max(th1, th2);
    omega_max = (theta_max > 0.0) ? 40.0 * std::max(theta_max, om) : om;
    edges = spectral_edges(om, theta_max, omega_max);
  }

  bool empty() const { return omega_max <= 0.0; }

  // w^4 [g1 - g2] / (A R^3): intensity weight
  double fold_intensity(double w) const {
    const double w4 = w * w * w * w;
    return w4 * (2.0 * ucoth(w, th2) - ucoth(w + om, th1) -
                 ucoth(om - w, th1));
  }

  // w^3 [g1 + g2] / (A R^3): torque weight
  double fold_torque(double w) const {
    const double w2 = w * w;
    return w2 * (2.0 * om * ucoth(w, th2) -
                 w * (ucoth(w + om, th1) - ucoth(om - w, th1)));
  }
};

}  // namespace

double spectral_rate_rotational(const SystemConfig& config, double rel_tol) {
  const SpectralSetup s(config);
  if (s.empty()) return 0.0;
  const ChannelWeights weights(config, s.omega_max, kernel_tol_for(rel_tol));

  auto f = [&](double w) { return weights.psi_weighted(w) * s.fold_intensity(w); };
  quadrature::Options opt;
  opt.rel_tol = rel_tol;
  const auto out = quadrature::integrate_or_throw(
      f, s.edges, opt, "spectral_rate_rotational");
  return cgs::hbar / (2.0 * pi * std::pow(cgs::c_light, 3)) * out.value;
}

double spectral_torque_rotational(const SystemConfig& config, double rel_tol) {
  const SpectralSetup s(config);
  if (s.empty()) return 0.0;
  const ChannelWeights weights(config, s.omega_max, kernel_tol_for(rel_tol));

  auto f = [&](double w) { return weights.psi_weighted(w) * s.fold_torque(w); };
  quadrature::Options opt;
  opt.rel_tol = rel_tol;
  const auto out = quadrature::integrate_or_throw(
      f, s.edges, opt, "spectral_torque_rotational");
  return cgs::hbar / (pi * std::pow(cgs::c_light, 3)) * out.value;
}

double heat_exchange_z(const SystemConfig& config, double rel_tol) {
  config.validate();
  const double th1 = thermal_frequency(config.thermal.t_particle);
  const double th2 = thermal_frequency(config.thermal.t_environment);
  if (th1 == th2) return 0.0;

  const double theta_max = std::max(th1, th2);
  const double omega_max = 40.0 * theta_max;
  const double ktol = kernel_tol_for(rel_tol);
  const double n = config.plate.refractive_index;
  const double r3 = std::pow(config.material.radius, 3);
  const double z0c = config.z0 / cgs::c_light;
  const bool frozen = omega_max * z0c < 1e-10;

  const double chi_e0 = frozen ? chi_kernel(n, 0.0, Channel::electric, ktol).value : 0.0;
  const double chi_m0 = (frozen && config.material.slope_m)
                            ? chi_kernel(n, 0.0, Channel::magnetic, ktol).value
                            : 0.0;

  auto chi_weighted = [&](double w) {
    double acc;
    if (frozen) {
      acc = config.material.slope_e * chi_e0;
      if (config.material.slope_m) acc += *config.material.slope_m * chi_m0;
    } else {
      const double x = w * z0c;
      acc = config.material.slope_e *
            chi_kernel(n, x, Channel::electric, ktol).value;
      if (config.material.slope_m) {
        acc += *config.material.slope_m *
               chi_kernel(n, x, Channel::magnetic, ktol).value;
      }
    }
    return acc * r3;
  };

  auto f = [&](double w) {
    const double w4 = w * w * w * w;
    return w4 * chi_weighted(w) * (ucoth(w, th2) - ucoth(w, th1));
  };

  quadrature::Options opt;
  opt.rel_tol = rel_tol;
  const std::vector<double> edges = spectral_edges(0.0, theta_max, omega_max);
  const auto out =
      quadrature::integrate_or_throw(f, edges, opt, "heat_exchange_z");
  return -cgs::hbar / (pi * std::pow(cgs::c_light, 3)) * out.value;
}

SpectralSample spectral_intensity_sample(const SystemConfig& config,
                                         double omega, double kernel_rel_tol) {
  const SpectralSetup s(config);
  SpectralSample sample;
  sample.omega = omega;
  if (s.empty() || omega <= 0.0) return sample;
  const ChannelWeights weights(config, std::max(omega, s.omega_max),
                               std::clamp(kernel_rel_tol, 1e-12, 1e-4));
  sample.integrand_value = cgs::hbar /
                           (2.0 * pi * std::pow(cgs::c_light, 3)) *
                           weights.psi_weighted(omega) *
                           s.fold_intensity(omega);
  return sample;
}

}  // namespace spinrad
