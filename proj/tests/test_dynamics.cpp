#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spinrad/constants.hpp"
#include "spinrad/dynamics.hpp"
#include "spinrad/equilibrium.hpp"

using namespace spinrad;

namespace {

constexpr double pi = std::numbers::pi;

SystemConfig scenario(double omega, double t1, double t2) {
  SystemConfig cfg;
  cfg.material = Material::preset("SiO2", 5e-6);
  cfg.plate.refractive_index = 3.0;
  cfg.z0 = 1e-4;
  cfg.omega_rot = omega;
  cfg.thermal = {t1, t2};
  return cfg;
}

BodyProperties sio2_sphere(const SystemConfig& cfg) {
  // 2.2 g/cm^3, Dulong-Petit 1.245e7 erg/(g K)
  return BodyProperties::solid_sphere(cfg.material, 2.2, 1.245e7);
}

}  // namespace

TEST_CASE("solid sphere body properties") {
  const auto cfg = scenario(1e7, 1.0, 1.0);
  const auto body = sio2_sphere(cfg);
  const double mass = 4.0 / 3.0 * pi * std::pow(5e-6, 3) * 2.2;
  CHECK(body.moment_of_inertia ==
        doctest::Approx(0.4 * mass * 25e-12).epsilon(1e-12));
  CHECK(body.heat_capacity.at(1.0) ==
        doctest::Approx(mass * 1.245e7).epsilon(1e-12));
}

TEST_CASE("heat capacity table interpolates and clamps") {
  const HeatCapacity hc(std::vector<std::pair<double, double>>{
      {1.0, 10.0}, {2.0, 20.0}, {4.0, 30.0}});
  CHECK(hc.at(0.5) == 10.0);
  CHECK(hc.at(1.5) == doctest::Approx(15.0));
  CHECK(hc.at(3.0) == doctest::Approx(25.0));
  CHECK(hc.at(9.0) == 30.0);
  CHECK_NOTHROW(hc.validate());
  const HeatCapacity bad(std::vector<std::pair<double, double>>{{1.0, -1.0}});
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("fixed point stays fixed") {
  const auto cfg = scenario(0.0, 1.0, 1.0);
  const auto body = sio2_sphere(cfg);

  const auto sr = step(cfg, body, {0.0, 0.0, 1.0}, 1e10);
  CHECK(sr.state.omega == 0.0);
  CHECK(sr.state.t_particle == 1.0);
  CHECK(sr.err_omega == 0.0);

  const auto traj = evolve(cfg, body, 1e12, 1e11);
  REQUIRE(traj.size() >= 10);
  for (const auto& p : traj) {
    CHECK(p.omega == 0.0);
    CHECK(p.t_particle == 1.0);
    CHECK(p.kinetic_energy == 0.0);
  }
}

TEST_CASE("single step is deterministic and brakes the spin") {
  const auto cfg = scenario(1e7, 1.0, 1.0);
  const auto body = sio2_sphere(cfg);
  const RotationState s0{0.0, 1e7, 1.0};
  const double dt = 1e9;

  const auto a = step(cfg, body, s0, dt);
  const auto b = step(cfg, body, s0, dt);
  CHECK(a.state.omega == b.state.omega);
  CHECK(a.state.t_particle == b.state.t_particle);
  CHECK(a.state.omega < s0.omega);
  CHECK(a.state.time == dt);
}

TEST_CASE("halving dt lands within the embedded error estimate") {
  const auto cfg = scenario(1e7, 2.0, 1.0);
  const auto body = sio2_sphere(cfg);
  const RotationState s0{0.0, 1e7, 2.0};
  const double dt = 2e11;

  const auto full = step(cfg, body, s0, dt);
  const auto half1 = step(cfg, body, s0, 0.5 * dt);
  const auto half2 = step(cfg, body, half1.state, 0.5 * dt);

  CHECK(std::abs(full.state.t_particle - half2.state.t_particle) <=
        2.0 * full.err_t_particle + 1e-12 * s0.t_particle);
  CHECK(std::abs(full.state.omega - half2.state.omega) <=
        2.0 * full.err_omega + 1e-12 * s0.omega);
}

TEST_CASE("cold start heats to the effective temperature before spinning down") {
  SystemConfig cfg = scenario(1e7, 0.0, 0.0);
  BodyProperties body;
  body.moment_of_inertia = 1.152e-26;
  body.heat_capacity = HeatCapacity(1e-20);  // fast thermal relaxation

  const double t1_star = equilibrium_theta(0.0, 1e7).t1_star;
  const double t_end = 1.6e24;  // ~10 thermal e-foldings at this C
  const auto traj = evolve(cfg, body, t_end, t_end / 64.0);

  REQUIRE(traj.size() >= 32);
  CHECK(traj.back().t_particle == doctest::Approx(t1_star).epsilon(0.01));
  CHECK(traj.back().omega == doctest::Approx(1e7).epsilon(1e-9));
  // temperature climbs monotonically from the unstable cold state
  for (size_t i = 1; i < traj.size(); ++i) {
    CHECK(traj[i].t_particle >= traj[i - 1].t_particle - 1e-12 * t1_star);
  }
}

TEST_CASE("kinetic energy never grows in the braking regime") {
  SystemConfig cfg = scenario(1e7, 1.0, 1.0);
  const auto body = sio2_sphere(cfg);
  const auto traj = evolve(cfg, body, 1e14, 1e13);
  for (size_t i = 1; i < traj.size(); ++i) {
    CHECK(traj[i].kinetic_energy <= traj[i - 1].kinetic_energy);
  }
}

TEST_CASE("trajectory energy audit via finite differences") {
  // thermal transient from T1 = 2 K toward the T2 = 1 K equilibrium
  SystemConfig cfg = scenario(1e7, 2.0, 1.0);
  const auto body = sio2_sphere(cfg);
  const double t_end = 1e13;
  const int samples = 4096;
  const auto traj = evolve(cfg, body, t_end, t_end / samples, 1e-10);
  REQUIRE(traj.size() == samples + 1);

  const ClosedRates cr(cfg.material, cfg.plate);
  const double th2 = thermal_frequency(1.0);
  const double dt = t_end / samples;
  for (size_t i = 64; i < traj.size() - 1; i += 128) {
    const double dke =
        (traj[i + 1].kinetic_energy - traj[i - 1].kinetic_energy) / (2 * dt);
    const double th1 = thermal_frequency(traj[i].t_particle);
    const double drain = cr.intensity(th1, th2, traj[i].omega) +
                         cr.heating(th1, th2, traj[i].omega);
    CHECK(dke == doctest::Approx(-drain).epsilon(1e-5));
  }
}

TEST_CASE("input validation") {
  const auto cfg = scenario(1e7, 1.0, 1.0);
  const auto body = sio2_sphere(cfg);
  CHECK_THROWS_AS(step(cfg, body, {0, 1e7, 1.0}, 0.0), std::domain_error);
  CHECK_THROWS_AS(evolve(cfg, body, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(evolve(cfg, body, 1.0, 0.0), std::domain_error);
  BodyProperties bad;
  bad.moment_of_inertia = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
}
