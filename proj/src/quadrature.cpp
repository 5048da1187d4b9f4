#include "spinrad/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "spinrad/errors.hpp"

namespace spinrad::quadrature {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1,1].
constexpr double xgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double wgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(center - half * xgk[i]);
    fv[14 - i] = f(center + half * xgk[i]);
  }
  fv[7] = f(center);

  double resk = wgk[7] * fv[7];
  double resg = wg[3] * fv[7];
  double resabs = wgk[7] * std::abs(fv[7]);
  for (int i = 0; i < 7; ++i) {
    const double sum = fv[i] + fv[14 - i];
    resk += wgk[i] * sum;
    resabs += wgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    if (i % 2 == 1) resg += wg[i / 2] * sum;
  }

  const double reskh = resk * 0.5;
  double resasc = wgk[7] * std::abs(fv[7] - reskh);
  for (int i = 0; i < 7; ++i) {
    resasc += wgk[i] * (std::abs(fv[i] - reskh) + std::abs(fv[14 - i] - reskh));
  }

  Panel p;
  p.a = a;
  p.b = b;
  p.value = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(err, 50.0 * eps * resabs);
  }
  p.error = err;
  return p;
}

}  // namespace

Outcome integrate(const std::function<double(double)>& f,
                  std::span<const double> edges, const Options& opt) {
  Outcome out;
  if (edges.size() < 2) {
    out.converged = true;
    return out;
  }

  std::priority_queue<Panel> heap;
  double total = 0.0, err_sum = 0.0, l1 = 0.0;
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i] < edges[i + 1])) continue;
    Panel p = evaluate(f, edges[i], edges[i + 1]);
    total += p.value;
    err_sum += p.error;
    l1 += std::abs(p.value);
    heap.push(p);
  }
  out.panels = static_cast<int>(heap.size());

  auto bound = [&] {
    return std::max({opt.abs_tol, opt.rel_tol * std::abs(total),
                     opt.rel_tol * opt.scale_floor * l1});
  };

  while (err_sum > bound() && !heap.empty() && out.panels < opt.max_panels) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval at floating-point resolution; keep its estimate and move on
      heap.push(Panel{worst.a, worst.b, worst.value, 0.0});
      err_sum -= worst.error;
      continue;
    }
    Panel left = evaluate(f, worst.a, mid);
    Panel right = evaluate(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err_sum += left.error + right.error - worst.error;
    l1 += std::abs(left.value) + std::abs(right.value) - std::abs(worst.value);
    heap.push(left);
    heap.push(right);
    ++out.panels;
  }

  out.value = total;
  out.abs_error = err_sum;
  out.converged = err_sum <= bound();
  return out;
}

Outcome integrate_or_throw(const std::function<double(double)>& f,
                           std::span<const double> edges, const Options& opt,
                           const char* context) {
  Outcome out = integrate(f, edges, opt);
  if (!out.converged) {
    throw NumericalError(std::string(context) +
                             ": quadrature did not converge within panel "
                             "budget",
                         out.value, out.abs_error);
  }
  return out;
}

}  // namespace spinrad::quadrature
