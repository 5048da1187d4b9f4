#include "spinrad/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinrad/constants.hpp"
#include "spinrad/errors.hpp"

namespace spinrad {

namespace {

constexpr double pi = std::numbers::pi;

double heating_f(double th1, double th2, double om) {
  return ClosedRates::heating_bracket(th1, th2, om);
}

double bracket_scale(double th1, double th2, double om) {
  const double t16 = std::pow(th1, 6), t26 = std::pow(th2, 6);
  const double o2 = om * om;
  return std::max({t16 / 126.0, t26 / 126.0, o2 * std::pow(th2, 4) / 30.0,
                   o2 * o2 * th1 * th1 / 6.0, 2.0 * std::pow(om, 6) / 15.0});
}

}  // namespace

EquilibriumResult equilibrium_theta(double theta2, double omega_rot) {
  if (theta2 < 0.0 || omega_rot < 0.0) {
    throw std::domain_error("equilibrium_theta: inputs must be >= 0");
  }
  if (theta2 == 0.0 && omega_rot == 0.0) {
    throw std::domain_error(
        "equilibrium_theta: theta2 and omega cannot both be zero");
  }

  EquilibriumResult res;
  if (omega_rot == 0.0) {
    res.theta1_star = theta2;  // plain thermal equilibrium
    res.t1_star = theta2 * cgs::hbar / (2.0 * pi * cgs::k_boltzmann);
    res.residual = 0.0;
    return res;
  }

  const double om = omega_rot;
  auto f = [&](double th1) { return heating_f(th1, theta2, om); };

  // f(theta2) = Om^2 th2^4/30 + Om^4 th2^2/6 + 2 Om^6/15 > 0, so the root
  // lies above theta2. Double the upper end until the sign flips.
  double lo = theta2;
  double flo = f(lo);
  double hi = std::max(theta2, 3.0 * om);
  double fhi = f(hi);
  int iter = 0;
  while (fhi > 0.0 && iter < 200) {
    lo = hi;
    flo = fhi;
    hi *= 2.0;
    fhi = f(hi);
    ++iter;
  }
  if (fhi > 0.0) {
    throw NumericalError("equilibrium_theta: failed to bracket root", hi, 0.0);
  }

  // Safeguarded bisection with a secant step when it stays inside the
  // bracket; converges to a few ulps.
  double root = 0.5 * (lo + hi);
  for (int k = 0; k < 200 && hi - lo > 1e-16 * hi; ++k) {
    double mid;
    const double denom = fhi - flo;
    if (denom != 0.0) {
      mid = lo - flo * (hi - lo) / denom;  // secant
      const double margin = 1e-3 * (hi - lo);
      if (!(mid > lo + margin && mid < hi - margin)) {
        mid = 0.5 * (lo + hi);
      }
    } else {
      mid = 0.5 * (lo + hi);
    }
    const double fm = f(mid);
    ++iter;
    if (fm == 0.0) {
      lo = hi = mid;
      flo = fhi = 0.0;
    } else if (fm > 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
    root = 0.5 * (lo + hi);
  }

  res.theta1_star = root;
  res.t1_star = root * cgs::hbar / (2.0 * pi * cgs::k_boltzmann);
  res.iterations = iter;
  res.residual = std::abs(f(root)) / bracket_scale(root, theta2, om);
  return res;
}

EquilibriumResult solve_equilibrium(const SystemConfig& config,
                                    double kernel_rel_tol) {
  config.validate();
  const double th2 = thermal_frequency(config.thermal.t_environment);
  EquilibriumResult res = equilibrium_theta(th2, config.omega_rot);
  const ClosedRates cr(config.material, config.plate, kernel_rel_tol);
  res.intensity_eq = cr.intensity(res.theta1_star, th2, config.omega_rot);
  return res;
}

double i0_factor(const Material& material, double refractive_index, double t2,
                 double rel_tol) {
  material.validate();
  if (!(t2 > 0.0)) throw std::domain_error("i0_factor: t2 must be positive");
  if (!(refractive_index > 1.0)) {
    throw std::domain_error("i0_factor: n must exceed 1");
  }
  const double tol = std::clamp(rel_tol, 1e-12, 1e-4);
  const double psi0 = psi_e(refractive_index, 0.0, tol).value;
  const double th2 = thermal_frequency(t2);
  const double r3 = std::pow(material.radius, 3);
  const double erg_s = cgs::hbar * material.slope_e * r3 * std::abs(psi0) *
                       std::pow(th2, 6) /
                       (2.0 * pi * std::pow(cgs::c_light, 3));
  return erg_s * cgs::watt_per_erg_s;
}

std::vector<CurvePoint> normalized_curve(double refractive_index,
                                         const Material& material, double t2,
                                         const std::vector<double>& omega_grid,
                                         CurveMode mode, double rel_tol) {
  material.validate();
  if (!(t2 > 0.0)) {
    throw std::domain_error("normalized_curve: t2 must be positive");
  }
  for (double g : omega_grid) {
    if (!(g > 0.0)) {
      throw std::domain_error("normalized_curve: grid values must be > 0");
    }
  }

  PlateOptics plate{refractive_index};
  const ClosedRates cr(material, plate, std::clamp(rel_tol, 1e-12, 1e-4));
  const double th2 = thermal_frequency(t2);
  // I0 in erg/s with the electric-channel prefactor: P_e theta2^6
  const double i0 = cr.prefactor_electric() * std::pow(th2, 6);

  std::vector<CurvePoint> pts;
  pts.reserve(omega_grid.size());
  for (double g : omega_grid) {
    const double om = g * th2;
    CurvePoint p;
    p.omega_over_theta2 = g;
    double th1;
    if (mode == CurveMode::equilibrium) {
      th1 = equilibrium_theta(th2, om).theta1_star;
    } else {
      th1 = th2;
    }
    p.t1_over_t2 = th1 / th2;
    p.intensity_over_i0 = cr.intensity(th1, th2, om) / i0;
    pts.push_back(p);
  }
  return pts;
}

std::vector<double> default_curve_grid() {
  constexpr int points = 200;
  std::vector<double> grid(points);
  const double lo = -2.0, hi = 2.0;
  for (int i = 0; i < points; ++i) {
    grid[i] = std::pow(10.0, lo + (hi - lo) * i / (points - 1));
  }
  return grid;
}

TableMatrix table_repro(const Material& material,
                        const std::vector<double>& n_list,
                        const std::vector<double>& t2_list, double rel_tol) {
  if (n_list.empty() || t2_list.empty()) {
    throw std::domain_error("table_repro: n and t2 lists must be non-empty");
  }
  TableMatrix table;
  table.n_values = n_list;
  table.t2_kelvin = t2_list;
  table.i0_watt.assign(t2_list.size(), std::vector<double>(n_list.size()));
  for (size_t r = 0; r < t2_list.size(); ++r) {
    for (size_t c = 0; c < n_list.size(); ++c) {
      table.i0_watt[r][c] = i0_factor(material, n_list[c], t2_list[r], rel_tol);
    }
  }
  return table;
}

}  // namespace spinrad
