#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "spinrad/constants.hpp"
#include "spinrad/rates.hpp"

using namespace spinrad;

namespace {

constexpr double pi = std::numbers::pi;

SystemConfig base_config() {
  SystemConfig cfg;
  cfg.material = Material::preset("SiO2", 5e-6);
  cfg.plate.refractive_index = 3.0;
  cfg.z0 = 1e-7;  // keeps x = omega z0/c far below resolution
  cfg.omega_rot = 1e6;
  cfg.thermal = {0.0, 0.0};
  return cfg;
}

double kelvin_of(double theta) {
  return theta * cgs::hbar / (2.0 * pi * cgs::k_boltzmann);
}

}  // namespace

TEST_CASE("closed-form brackets satisfy the energy split identically") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> decade(6.0, 12.0);
  for (int i = 0; i < 10000; ++i) {
    const double th1 = std::pow(10.0, decade(rng));
    const double th2 = std::pow(10.0, decade(rng));
    const double om = std::pow(10.0, decade(rng));
    const double bi = ClosedRates::intensity_bracket(th1, th2, om);
    const double bm = ClosedRates::torque_bracket(th1, th2, om);
    const double bq = ClosedRates::heating_bracket(th1, th2, om);
    const double gap = bm * om - bi - bq;
    const double scale = std::max({std::abs(bm * om), std::abs(bi),
                                   std::abs(bq)});
    REQUIRE(std::abs(gap) <= 1e-12 * scale);
  }
}

TEST_CASE("rate_report bundles the closed forms with a tiny residual") {
  SystemConfig cfg = base_config();
  cfg.thermal = {2.0, 1.0};
  cfg.omega_rot = 1e7;
  const RateReport rep = rate_report(cfg);
  CHECK(rep.balance_residual < 1e-12);
  CHECK(rep.intensity > 0.0);  // hotter particle radiates
  CHECK(rep.torque < 0.0);
  CHECK(rep.x_small_parameter < 1e-3);

  SUBCASE("no rotation: torque vanishes, intensity mirrors heating") {
    cfg.omega_rot = 0.0;
    const RateReport r0 = rate_report(cfg);
    CHECK(r0.torque == 0.0);
    CHECK(r0.intensity == doctest::Approx(-r0.heating).epsilon(1e-12));
  }

  SUBCASE("equal temperatures with spin: radiates, heats, brakes") {
    cfg.thermal = {1.0, 1.0};
    cfg.omega_rot = 1e7;
    const RateReport r = rate_report(cfg);
    CHECK(r.intensity > 0.0);
    CHECK(r.heating > 0.0);
    CHECK(r.torque < 0.0);
  }

  SUBCASE("full equilibrium is quiescent") {
    cfg.thermal = {1.0, 1.0};
    cfg.omega_rot = 0.0;
    const RateReport r = rate_report(cfg);
    CHECK(r.intensity == 0.0);
    CHECK(r.torque == 0.0);
    CHECK(r.heating == 0.0);
  }
}

TEST_CASE("closed intensity signs") {
  SystemConfig cfg = base_config();
  // net absorption when the environment is much hotter
  cfg.thermal = {0.1, 10.0};
  cfg.omega_rot = 1e6;
  CHECK(intensity_closed(cfg) < 0.0);
  // positive whenever theta1 >= theta2 with spin
  cfg.thermal = {5.0, 5.0};
  CHECK(intensity_closed(cfg) > 0.0);
  CHECK(torque_closed(cfg) < 0.0);
}

TEST_CASE("zero-temperature quadrature against the analytic moments") {
  SystemConfig cfg = base_config();
  const double om = cfg.omega_rot;
  const double psi0 = psi_e(3.0, 0.0, 1e-10).value;
  const double ar3 = cfg.material.slope_e * std::pow(cfg.material.radius, 3);
  const double c3 = std::pow(cgs::c_light, 3);

  // Int_0^Om w^4 (Om - w) dw = Om^6/30, Int_0^Om w^3 (Om - w) dw = Om^5/20
  const double i_expected =
      -cgs::hbar * ar3 * psi0 / (pi * c3) * std::pow(om, 6) / 30.0;
  const double m_expected =
      2.0 * cgs::hbar * ar3 * psi0 / (pi * c3) * std::pow(om, 5) / 20.0;

  const double i = intensity_zero_t(cfg, 1e-10);
  const double m = torque_zero_t(cfg, 1e-10);
  CHECK(i == doctest::Approx(i_expected).epsilon(1e-8));
  CHECK(m == doctest::Approx(m_expected).epsilon(1e-8));
  CHECK(i > 0.0);
  CHECK(m < 0.0);
  CHECK(-m * om > i);  // friction work exceeds radiated power

  SUBCASE("Omega^6 and Omega^5 scaling across two decades") {
    SystemConfig big = cfg;
    big.omega_rot = 100.0 * om;
    CHECK(intensity_zero_t(big, 1e-10) ==
          doctest::Approx(i * 1e12).epsilon(1e-7));
    CHECK(torque_zero_t(big, 1e-10) ==
          doctest::Approx(m * 1e10).epsilon(1e-7));
  }

  SUBCASE("empty range and transparent plate") {
    SystemConfig off = cfg;
    off.omega_rot = 0.0;
    CHECK(intensity_zero_t(off) == 0.0);
    CHECK(torque_zero_t(off) == 0.0);
    SystemConfig vacuum = cfg;
    vacuum.plate.refractive_index = 1.0;
    CHECK(intensity_zero_t(vacuum, 1e-9) == 0.0);
  }

  SUBCASE("channels add") {
    SystemConfig both = cfg;
    both.material.slope_m = 2.0e-15;
    const double psi0m = psi_m(3.0, 0.0, 1e-10).value;
    const double extra = -cgs::hbar * 2.0e-15 *
                         std::pow(cfg.material.radius, 3) * psi0m /
                         (pi * c3) * std::pow(om, 6) / 30.0;
    CHECK(intensity_zero_t(both, 1e-10) ==
          doctest::Approx(i + extra).epsilon(1e-8));
  }
}

TEST_CASE("zero-T closed forms coincide with the quadrature route") {
  SystemConfig cfg = base_config();
  cfg.omega_rot = 3e6;
  CHECK(intensity_zero_t(cfg, 1e-10) ==
        doctest::Approx(intensity_closed(cfg)).epsilon(1e-8));
  CHECK(torque_zero_t(cfg, 1e-10) ==
        doctest::Approx(torque_closed(cfg)).epsilon(1e-8));
}

TEST_CASE("spectral fold reproduces the zero-temperature anchor") {
  SystemConfig cfg = base_config();
  cfg.omega_rot = 2e6;
  CHECK(spectral_rate_rotational(cfg, 1e-10) ==
        doctest::Approx(intensity_zero_t(cfg, 1e-10)).epsilon(1e-8));
  CHECK(spectral_torque_rotational(cfg, 1e-10) ==
        doctest::Approx(torque_zero_t(cfg, 1e-10)).epsilon(1e-8));
}

TEST_CASE("spectral fold matches the closed forms at finite temperature") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> om_exp(6.0, 8.5);
  std::uniform_real_distribution<double> ratio_exp(-2.0, 2.0);

  SystemConfig cfg = base_config();
  cfg.z0 = 1e-9;
  const ClosedRates cr(cfg.material, cfg.plate, 1e-10);

  for (int i = 0; i < 10; ++i) {
    const double om = std::pow(10.0, om_exp(rng));
    const double th1 = om * std::pow(10.0, ratio_exp(rng));
    const double th2 = (i % 2 == 0) ? th1 : om * std::pow(10.0, ratio_exp(rng));
    cfg.omega_rot = om;
    cfg.thermal = {kelvin_of(th1), kelvin_of(th2)};
    CAPTURE(om);
    CAPTURE(th1);
    CAPTURE(th2);

    const double th1r = thermal_frequency(cfg.thermal.t_particle);
    const double th2r = thermal_frequency(cfg.thermal.t_environment);
    const double i_closed = cr.intensity(th1r, th2r, om);
    const double m_closed = cr.torque(th1r, th2r, om);
    CHECK(spectral_rate_rotational(cfg, 1e-9) ==
          doctest::Approx(i_closed).epsilon(1e-6));
    CHECK(spectral_torque_rotational(cfg, 1e-9) ==
          doctest::Approx(m_closed).epsilon(1e-6));
  }
}

TEST_CASE("static spectral exchange flows toward the colder body") {
  SystemConfig cfg = base_config();
  cfg.omega_rot = 0.0;
  cfg.thermal = {2.0, 0.5};  // hot particle radiates
  CHECK(spectral_rate_rotational(cfg, 1e-9) > 0.0);
  CHECK(std::abs(spectral_torque_rotational(cfg, 1e-9)) <=
        1e-12 * spectral_rate_rotational(cfg, 1e-9));

  cfg.thermal = {0.5, 2.0};  // cold particle absorbs
  CHECK(spectral_rate_rotational(cfg, 1e-9) < 0.0);
}

TEST_CASE("z-channel heat exchange") {
  SystemConfig cfg = base_config();
  cfg.thermal = {1.0, 1.0};
  CHECK(heat_exchange_z(cfg) == 0.0);

  cfg.thermal = {2.0, 1.0};
  const double q_hot = heat_exchange_z(cfg, 1e-9);
  CHECK(q_hot < 0.0);  // hot particle loses heat through the z channel

  SUBCASE("independent of rotation") {
    SystemConfig spun = cfg;
    spun.omega_rot = 0.0;
    const double a = heat_exchange_z(spun, 1e-9);
    spun.omega_rot = 1e6;
    const double b = heat_exchange_z(spun, 1e-9);
    CHECK(a == doctest::Approx(b).epsilon(1e-13));
  }

  SUBCASE("comparable to the perpendicular-channel static exchange") {
    cfg.omega_rot = 0.0;
    const double q_perp = -spectral_rate_rotational(cfg, 1e-9);
    CHECK(q_hot / q_perp > 0.5);
    CHECK(q_hot / q_perp < 2.0);
  }
}

TEST_CASE("spectral sample diagnostics stay finite") {
  SystemConfig cfg = base_config();
  cfg.thermal = {2.0, 1.0};
  cfg.omega_rot = 1e7;
  for (double w : {1e5, 1e6, 1e7, 1e9, 1e12, 1e13}) {
    const auto s = spectral_intensity_sample(cfg, w);
    CHECK(std::isfinite(s.integrand_value));
    CHECK(s.omega == w);
  }
}

TEST_CASE("x-smallness guard parameter") {
  SystemConfig cfg = base_config();
  cfg.z0 = 1e-4;
  cfg.omega_rot = 1e7;
  cfg.thermal = {1.0, 1.0};
  const double th = thermal_frequency(1.0);
  CHECK(x_small_parameter(cfg) ==
        doctest::Approx(3.0 * 1e-4 * th / cgs::c_light).epsilon(1e-12));
  // pushing the distance out flags the closed-form regime
  cfg.z0 = 1.0;
  CHECK(x_small_parameter(cfg) > 0.1);
}

TEST_CASE("config validation") {
  SystemConfig cfg = base_config();
  cfg.z0 = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  cfg = base_config();
  cfg.omega_rot = -1.0;
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  cfg = base_config();
  cfg.plate.refractive_index = 0.8;
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  cfg = base_config();
  cfg.thermal.t_particle = -2.0;
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
}
