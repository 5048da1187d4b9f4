#include "spinrad/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinrad/constants.hpp"
#include "spinrad/errors.hpp"

namespace spinrad {

namespace {

constexpr double pi = std::numbers::pi;

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                 e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640,
                 e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

struct Derivs {
  double domega;
  double dt1;
};

struct RateContext {
  ClosedRates rates;
  double theta2;
  const BodyProperties& body;

  RateContext(const SystemConfig& config, const BodyProperties& body_)
      : rates(config.material, config.plate),
        theta2(thermal_frequency(config.thermal.t_environment)),
        body(body_) {}

  Derivs operator()(double omega, double t1) const {
    const double th1 = thermal_frequency(t1);
    Derivs d;
    d.domega = rates.torque(th1, theta2, omega) / body.moment_of_inertia;
    d.dt1 = rates.heating(th1, theta2, omega) / body.heat_capacity.at(t1);
    return d;
  }
};

struct RawStep {
  double omega, t1;
  double err_omega, err_t1;
};

RawStep dp45(const RateContext& ctx, double omega, double t1, double h) {
  const Derivs k1 = ctx(omega, t1);
  const Derivs k2 = ctx(omega + h * a21 * k1.domega, t1 + h * a21 * k1.dt1);
  const Derivs k3 = ctx(omega + h * (a31 * k1.domega + a32 * k2.domega),
                        t1 + h * (a31 * k1.dt1 + a32 * k2.dt1));
  const Derivs k4 =
      ctx(omega + h * (a41 * k1.domega + a42 * k2.domega + a43 * k3.domega),
          t1 + h * (a41 * k1.dt1 + a42 * k2.dt1 + a43 * k3.dt1));
  const Derivs k5 =
      ctx(omega + h * (a51 * k1.domega + a52 * k2.domega + a53 * k3.domega +
                       a54 * k4.domega),
          t1 + h * (a51 * k1.dt1 + a52 * k2.dt1 + a53 * k3.dt1 + a54 * k4.dt1));
  const Derivs k6 =
      ctx(omega + h * (a61 * k1.domega + a62 * k2.domega + a63 * k3.domega +
                       a64 * k4.domega + a65 * k5.domega),
          t1 + h * (a61 * k1.dt1 + a62 * k2.dt1 + a63 * k3.dt1 + a64 * k4.dt1 +
                    a65 * k5.dt1));

  RawStep out;
  out.omega = omega + h * (b1 * k1.domega + b3 * k3.domega + b4 * k4.domega +
                           b5 * k5.domega + b6 * k6.domega);
  out.t1 = t1 + h * (b1 * k1.dt1 + b3 * k3.dt1 + b4 * k4.dt1 + b5 * k5.dt1 +
                     b6 * k6.dt1);
  const Derivs k7 = ctx(out.omega, out.t1);
  out.err_omega =
      std::abs(h * (e1 * k1.domega + e3 * k3.domega + e4 * k4.domega +
                    e5 * k5.domega + e6 * k6.domega + e7 * k7.domega));
  out.err_t1 = std::abs(h * (e1 * k1.dt1 + e3 * k3.dt1 + e4 * k4.dt1 +
                             e5 * k5.dt1 + e6 * k6.dt1 + e7 * k7.dt1));
  return out;
}

}  // namespace

HeatCapacity::HeatCapacity(double constant_erg_per_k)
    : constant_(constant_erg_per_k) {}

HeatCapacity::HeatCapacity(std::vector<std::pair<double, double>> table)
    : table_(std::move(table)) {
  std::sort(table_.begin(), table_.end());
}

double HeatCapacity::at(double t_kelvin) const {
  if (table_.empty()) return constant_;
  if (t_kelvin <= table_.front().first) return table_.front().second;
  if (t_kelvin >= table_.back().first) return table_.back().second;
  for (size_t i = 1; i < table_.size(); ++i) {
    if (t_kelvin <= table_[i].first) {
      const auto [t0, c0] = table_[i - 1];
      const auto [t1, c1] = table_[i];
      const double w = (t_kelvin - t0) / (t1 - t0);
      return c0 + w * (c1 - c0);
    }
  }
  return table_.back().second;
}

void HeatCapacity::validate() const {
  if (table_.empty()) {
    if (!(constant_ > 0.0)) {
      throw std::domain_error("heat capacity must be positive");
    }
    return;
  }
  for (const auto& [t, c] : table_) {
    if (!(c > 0.0)) {
      throw std::domain_error("tabulated heat capacity must be positive");
    }
    if (t < 0.0) {
      throw std::domain_error("heat capacity table temperatures must be >= 0");
    }
  }
}

void BodyProperties::validate() const {
  if (!(moment_of_inertia > 0.0)) {
    throw std::domain_error("moment of inertia must be positive");
  }
  heat_capacity.validate();
}

BodyProperties BodyProperties::solid_sphere(const Material& material,
                                            double density_g_cm3,
                                            double specific_heat_erg_g_k) {
  material.validate();
  if (!(density_g_cm3 > 0.0) || !(specific_heat_erg_g_k > 0.0)) {
    throw std::domain_error("solid_sphere: density and cp must be positive");
  }
  const double r = material.radius;
  const double mass = 4.0 / 3.0 * pi * r * r * r * density_g_cm3;
  BodyProperties body;
  body.moment_of_inertia = 0.4 * mass * r * r;
  body.heat_capacity = HeatCapacity(mass * specific_heat_erg_g_k);
  body.validate();
  return body;
}

StepResult step(const SystemConfig& config, const BodyProperties& body,
                const RotationState& state, double dt) {
  config.validate();
  body.validate();
  if (!(dt > 0.0)) throw std::domain_error("step: dt must be positive");

  const RateContext ctx(config, body);
  const RawStep raw = dp45(ctx, state.omega, state.t_particle, dt);
  StepResult out;
  out.state.time = state.time + dt;
  out.state.omega = raw.omega;
  out.state.t_particle = raw.t1;
  out.err_omega = raw.err_omega;
  out.err_t_particle = raw.err_t1;
  if (!std::isfinite(raw.omega) || !std::isfinite(raw.t1)) {
    throw NumericalError("step: non-finite state", raw.omega, raw.err_omega);
  }
  return out;
}

std::vector<TrajectoryPoint> evolve(const SystemConfig& config,
                                    const BodyProperties& body, double t_end,
                                    double output_stride, double rel_tol) {
  config.validate();
  body.validate();
  if (!(t_end > 0.0)) throw std::domain_error("evolve: t_end must be positive");
  if (!(output_stride > 0.0)) {
    throw std::domain_error("evolve: output stride must be positive");
  }
  if (!(rel_tol > 0.0)) {
    throw std::domain_error("evolve: rel_tol must be positive");
  }

  const RateContext ctx(config, body);
  const double theta2 = ctx.theta2;

  double omega = config.omega_rot;
  double t1 = config.thermal.t_particle;
  double t = 0.0;

  // Error-control floors: the equilibrium temperature scale keeps the
  // relative control meaningful when T1 starts at zero.
  const double t_eq_scale =
      2.3 * omega * cgs::hbar / (2.0 * pi * cgs::k_boltzmann);
  const double atol_omega = rel_tol * std::max(omega, 1.0);
  const double atol_t1 =
      rel_tol * std::max({t1, config.thermal.t_environment, t_eq_scale, 1e-9});

  auto emit = [&](std::vector<TrajectoryPoint>& traj) {
    TrajectoryPoint p;
    p.time = t;
    p.omega = omega;
    p.t_particle = t1;
    p.intensity = ctx.rates.intensity(thermal_frequency(t1), theta2, omega);
    p.kinetic_energy = 0.5 * body.moment_of_inertia * omega * omega;
    traj.push_back(p);
  };

  std::vector<TrajectoryPoint> traj;
  traj.reserve(static_cast<size_t>(t_end / output_stride) + 2);
  emit(traj);

  double h = output_stride / 8.0;
  size_t next_sample = 1;
  const double h_min = 1e-14 * std::max(t_end, output_stride);

  while (t < t_end) {
    const double t_target =
        std::min(t_end, static_cast<double>(next_sample) * output_stride);
    if (t >= t_target) {
      ++next_sample;
      continue;
    }
    h = std::min(h, t_target - t);
    if (h < h_min) {
      throw NumericalError("evolve: step size underflow", omega, h);
    }

    RawStep raw = dp45(ctx, omega, t1, h);
    if (!std::isfinite(raw.omega) || !std::isfinite(raw.t1)) {
      h *= 0.5;
      continue;
    }
    // fixed points sit at zero; absorb sub-tolerance overshoots
    if (raw.omega < 0.0 && raw.omega > -atol_omega) raw.omega = 0.0;
    if (raw.t1 < 0.0 && raw.t1 > -atol_t1) raw.t1 = 0.0;
    const double en =
        std::max(raw.err_omega / (atol_omega + rel_tol * std::abs(omega)),
                 raw.err_t1 / (atol_t1 + rel_tol * std::abs(t1)));
    if (en <= 1.0 && raw.omega >= 0.0 && raw.t1 >= 0.0) {
      t += h;
      omega = raw.omega;
      t1 = raw.t1;
      if (t >= t_target - 1e-12 * t_target) {
        emit(traj);
        ++next_sample;
      }
      const double grow = (en > 0.0) ? 0.9 * std::pow(en, -0.2) : 5.0;
      h *= std::clamp(grow, 0.2, 5.0);
      h = std::min(h, t_end);
    } else {
      const double shrink =
          (en > 0.0) ? std::clamp(0.9 * std::pow(en, -0.2), 0.1, 0.5) : 0.5;
      h *= shrink;
    }
  }
  return traj;
}

}  // namespace spinrad
