#include "hypergroup/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "hypergroup/error.hpp"

namespace hypergroup::quadrature {

namespace {

using cplx = std::complex<double>;

// Kronrod abscissae (positive half, descending) and weights; odd indices are the Gauss nodes.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  cplx value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<cplx(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const cplx fc = f(c);
  cplx kron = fc * kWk[7];
  cplx gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = h * kXk[j];
    const cplx sum = f(c - dx) + f(c + dx);
    kron += kWk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kron *= h;
  gauss *= h;
  return {a, b, kron, std::abs(kron - gauss)};
}

}  // namespace

Result integrate(const std::function<cplx(double)>& f, std::span<const double> breaks, const Options& opts) {
  if (breaks.size() < 2) throw DomainError("integration needs at least two breakpoints");
  std::priority_queue<Panel> queue;
  cplx total(0.0);
  double error = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    if (!(breaks[k] < breaks[k + 1])) throw DomainError("integration breakpoints must increase");
    auto p = gk15(f, breaks[k], breaks[k + 1]);
    total += p.value;
    error += p.error;
    queue.push(p);
  }
  Result res;
  auto done = [&] { return error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
  while (!done() && queue.size() < opts.max_panels) {
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel too narrow to split further.
      queue.push(worst);
      break;
    }
    auto left = gk15(f, worst.a, mid);
    auto right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  // Recompute from the panels to shed accumulated rounding in the running sums.
  total = 0.0;
  error = 0.0;
  res.panels = queue.size();
  while (!queue.empty()) {
    total += queue.top().value;
    error += queue.top().error;
    queue.pop();
  }
  res.value = total;
  res.error_estimate = error;
  res.converged = done();
  return res;
}

}  // namespace hypergroup::quadrature
