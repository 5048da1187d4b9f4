#include "spinrad/kernels.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "spinrad/quadrature.hpp"

namespace spinrad {

namespace {

// Principal square root of a real argument as a complex number:
// +sqrt(z) for z >= 0, +i sqrt(-z) otherwise.
std::complex<double> branch_root(double z) {
  if (z >= 0.0) return {std::sqrt(z), 0.0};
  return {0.0, std::sqrt(-z)};
}

void check_kernel_args(double n, double x, double rel_tol) {
  if (!(n >= 1.0)) throw std::domain_error("kernel: n must be >= 1");
  if (!(x >= 0.0)) throw std::domain_error("kernel: x must be >= 0");
  if (!(rel_tol > 0.0) || rel_tol > 1e-4) {
    throw std::domain_error("kernel: rel_tol must lie in (0, 1e-4]");
  }
}

// Region integrands after substitution. s selects the kernel flavor.
//
// Region 1, u = sqrt(1 - t^2) in [0, 1]: both roots imaginary, the
// reflection factors are real,
//   De = (n^2 u - s1)/(n^2 u + s1),  Dm = (u - s1)/(u + s1),
//   s1 = sqrt(n^2 - 1 + u^2),
// and the phase exp(-2 i x u) beats against the i/u pole, leaving cos(2xu).
double psi_region1(double n, double x, Channel s, double u) {
  const double s1 = std::sqrt(n * n - 1.0 + u * u);
  const double de = (n * n * u - s1) / (n * n * u + s1);
  const double dm = (u - s1) / (u + s1);
  const double bracket =
      (s == Channel::electric) ? (u * u * de - dm) : (u * u * dm - de);
  return bracket * std::cos(2.0 * x * u);
}

// Region 2a, w = sqrt(t^2 - 1) in [0, W/sqrt2], s1 = sqrt(W^2 - w^2):
// the q root is imaginary, Im(De) = -2 n^2 w s1/(n^4 w^2 + s1^2) etc.
double psi_region2a(double n, double x, Channel s, double w) {
  const double w2 = n * n - 1.0 - w * w;
  const double s1 = std::sqrt(w2 < 0.0 ? 0.0 : w2);
  const double im_de = 2.0 * n * n * w * s1 / (n * n * n * n * w * w + s1 * s1);
  const double im_dm = 2.0 * w * s1 / (w * w + s1 * s1);
  const double bracket = (s == Channel::electric) ? (w * w * im_de + im_dm)
                                                  : (w * w * im_dm + im_de);
  return -std::exp(-2.0 * x * w) * bracket;
}

// Region 2b, v = sqrt(n^2 - t^2) in [0, W/sqrt2], s2^2 = W^2 - v^2.
double psi_region2b(double n, double x, Channel s, double v) {
  const double s2sq = n * n - 1.0 - v * v;
  const double s2 = std::sqrt(s2sq < 0.0 ? 0.0 : s2sq);
  const double n4 = n * n * n * n;
  double bracket;
  if (s == Channel::electric) {
    bracket = n * n * s2sq / (n4 * s2sq + v * v) + 1.0 / (s2sq + v * v);
  } else {
    bracket = s2sq / (s2sq + v * v) + n * n / (n4 * s2sq + v * v);
  }
  return -std::exp(-2.0 * x * s2) * 2.0 * v * v * bracket;
}

double chi_region1(double n, double x, Channel s, double u) {
  const double s1 = std::sqrt(n * n - 1.0 + u * u);
  const double d = (s == Channel::electric) ? (n * n * u - s1) / (n * n * u + s1)
                                            : (u - s1) / (u + s1);
  return -(1.0 - u * u) * d * std::cos(2.0 * x * u);
}

double chi_region2a(double n, double x, Channel s, double w) {
  const double w2 = n * n - 1.0 - w * w;
  const double s1 = std::sqrt(w2 < 0.0 ? 0.0 : w2);
  const double im_d =
      (s == Channel::electric)
          ? 2.0 * n * n * w * s1 / (n * n * n * n * w * w + s1 * s1)
          : 2.0 * w * s1 / (w * w + s1 * s1);
  return -(1.0 + w * w) * std::exp(-2.0 * x * w) * im_d;
}

double chi_region2b(double n, double x, Channel s, double v) {
  const double s2sq = n * n - 1.0 - v * v;
  const double s2 = std::sqrt(s2sq < 0.0 ? 0.0 : s2sq);
  const double r = (s == Channel::electric)
                       ? 2.0 * n * n * v * v / (n * n * n * n * s2sq + v * v)
                       : 2.0 * v * v / (s2sq + v * v);
  return -(n * n - v * v) * std::exp(-2.0 * x * s2) * r;
}

std::vector<double> region1_edges(double x) {
  // cos(2xu) has period pi/x in u; keep a few periods per seed panel.
  const int panels = std::max(1, static_cast<int>(std::ceil(x / 3.0)));
  std::vector<double> edges(panels + 1);
  for (int i = 0; i <= panels; ++i) edges[i] = static_cast<double>(i) / panels;
  return edges;
}

std::vector<double> region2_edges(double x, double wm) {
  std::vector<double> edges{0.0};
  // exp(-2xw) concentrates near w = 0 when x is large
  if (x > 2.0) {
    const double knee = 2.5 / x;
    if (knee < 0.5 * wm) edges.push_back(knee);
  }
  edges.push_back(wm);
  return edges;
}

using RegionFn = double (*)(double, double, Channel, double);

KernelValue kernel_eval(double n, double x, Channel s, double rel_tol,
                        RegionFn r1, RegionFn r2a, RegionFn r2b,
                        const char* context) {
  check_kernel_args(n, x, rel_tol);
  if (n == 1.0) return {0.0, 0.0};  // reflection factors vanish identically

  const double wm = std::sqrt(0.5 * (n * n - 1.0));
  quadrature::Options opt;
  opt.rel_tol = rel_tol;

  const auto e1 = region1_edges(x);
  const auto e2 = region2_edges(x, wm);

  const auto o1 = quadrature::integrate_or_throw(
      [&](double u) { return r1(n, x, s, u); }, e1, opt, context);
  const auto o2a = quadrature::integrate_or_throw(
      [&](double w) { return r2a(n, x, s, w); }, e2, opt, context);
  const auto o2b = quadrature::integrate_or_throw(
      [&](double v) { return r2b(n, x, s, v); }, e2, opt, context);

  KernelValue kv;
  kv.value = (o1.value + o2a.value + o2b.value) / kernel_response_norm;
  kv.abs_error_estimate =
      (o1.abs_error + o2a.abs_error + o2b.abs_error) / kernel_response_norm;
  return kv;
}

}  // namespace

void PlateOptics::validate() const {
  if (!(refractive_index >= 1.0)) {
    throw std::domain_error("plate refractive index must be >= 1");
  }
}

ReflectionFactors reflection_factors(double n, double t) {
  if (!(n >= 1.0)) throw std::domain_error("reflection_factors: n must be >= 1");
  if (!(t >= 0.0)) throw std::domain_error("reflection_factors: t must be >= 0");
  ReflectionFactors rf;
  rf.q0 = branch_root(t * t - 1.0);
  rf.q = branch_root(t * t - n * n);
  rf.delta_e = (n * n * rf.q0 - rf.q) / (n * n * rf.q0 + rf.q);
  rf.delta_m = (rf.q0 - rf.q) / (rf.q0 + rf.q);
  rf.r_e = (t * t - 1.0) * rf.delta_e + rf.delta_m;
  rf.r_m = (t * t - 1.0) * rf.delta_m + rf.delta_e;
  return rf;
}

KernelValue psi_e(double n, double x, double rel_tol) {
  return kernel_eval(n, x, Channel::electric, rel_tol, psi_region1,
                     psi_region2a, psi_region2b, "psi_e");
}

KernelValue psi_m(double n, double x, double rel_tol) {
  return kernel_eval(n, x, Channel::magnetic, rel_tol, psi_region1,
                     psi_region2a, psi_region2b, "psi_m");
}

KernelValue chi_kernel(double n, double x, Channel channel, double rel_tol) {
  return kernel_eval(n, x, channel, rel_tol, chi_region1, chi_region2a,
                     chi_region2b,
                     channel == Channel::electric ? "chi_e" : "chi_m");
}

double psi_integrand(double n, ScaledWavevector point, Channel channel) {
  const double t = point.t;
  const ReflectionFactors rf = reflection_factors(n, t);
  const std::complex<double> rs =
      (channel == Channel::electric) ? rf.r_e : rf.r_m;
  const std::complex<double> val =
      std::exp(-2.0 * point.x * rf.q0) / rf.q0 * rs;
  return t * val.imag();
}

double chi_integrand(double n, ScaledWavevector point, Channel channel) {
  const double t = point.t;
  const ReflectionFactors rf = reflection_factors(n, t);
  const std::complex<double> ds =
      (channel == Channel::electric) ? rf.delta_e : rf.delta_m;
  const std::complex<double> val =
      std::exp(-2.0 * point.x * rf.q0) / rf.q0 * ds;
  return t * t * t * val.imag();
}

void branch_self_test() {
  const KernelValue kv = psi_e(3.0, 0.0, 1e-6);
  if (!(kv.value < 0.0)) {
    throw std::logic_error(
        "branch convention self-test failed: psi_e(3,0) is not negative");
  }
}

}  // namespace spinrad
