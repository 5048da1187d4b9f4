#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "spinrad/errors.hpp"
#include "spinrad/quadrature.hpp"

using spinrad::quadrature::integrate;
using spinrad::quadrature::integrate_or_throw;
using spinrad::quadrature::Options;

namespace {
const std::vector<double> unit{0.0, 1.0};
}

TEST_CASE("kronrod rule is exact on polynomials") {
  Options opt;
  for (int deg : {0, 3, 7, 13, 19}) {
    auto out = integrate([deg](double x) { return std::pow(x, deg); }, unit,
                         opt);
    CHECK(out.value == doctest::Approx(1.0 / (deg + 1)).epsilon(1e-14));
    CHECK(out.converged);
  }
}

TEST_CASE("smooth transcendental integrand") {
  Options opt;
  opt.rel_tol = 1e-12;
  const std::vector<double> edges{0.0, std::numbers::pi};
  auto out = integrate([](double x) { return std::sin(x); }, edges, opt);
  CHECK(out.value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(out.abs_error >= std::abs(out.value - 2.0));
}

TEST_CASE("oscillatory integrand converges with refinement") {
  Options opt;
  opt.rel_tol = 1e-10;
  const double k = 73.0;
  auto out = integrate([k](double x) { return std::cos(k * x); }, unit, opt);
  CHECK(out.converged);
  CHECK(out.value == doctest::Approx(std::sin(k) / k).epsilon(1e-9));
}

TEST_CASE("kinked integrand handled by seeded edges or refinement") {
  Options opt;
  opt.rel_tol = 1e-10;
  auto f = [](double x) { return std::abs(x - 0.3); };
  const double exact = 0.5 * (0.3 * 0.3 + 0.7 * 0.7);
  auto seeded = integrate(f, std::vector<double>{0.0, 0.3, 1.0}, opt);
  CHECK(seeded.value == doctest::Approx(exact).epsilon(1e-13));
  auto blind = integrate(f, unit, opt);
  CHECK(blind.value == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("budget exhaustion throws with the best estimate attached") {
  Options opt;
  opt.rel_tol = 1e-14;
  opt.max_panels = 4;
  auto nasty = [](double x) { return std::sqrt(std::abs(x - 0.37)); };
  CHECK_THROWS_AS(
      integrate_or_throw(nasty, unit, opt, "test"), spinrad::NumericalError);
  try {
    integrate_or_throw(nasty, unit, opt, "test");
  } catch (const spinrad::NumericalError& e) {
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.error_estimate() > 0.0);
  }
}

TEST_CASE("error estimate bounds the true error on convergence") {
  Options opt;
  opt.rel_tol = 1e-9;
  auto f = [](double x) { return std::exp(-3.0 * x) * std::cos(9.0 * x); };
  // exact antiderivative of exp(ax)cos(bx) with a=-3, b=9
  const double a = -3.0, b = 9.0;
  auto F = [&](double x) {
    return std::exp(a * x) * (a * std::cos(b * x) + b * std::sin(b * x)) /
           (a * a + b * b);
  };
  auto out = integrate(f, unit, opt);
  CHECK(out.converged);
  CHECK(std::abs(out.value - (F(1.0) - F(0.0))) <= 10 * out.abs_error);
}
