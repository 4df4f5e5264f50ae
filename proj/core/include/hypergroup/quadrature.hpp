#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

namespace hypergroup::quadrature {

struct Result {
  std::complex<double> value;
  double error_estimate = 0.0;
  bool converged = false;
  std::size_t panels = 0;
};

struct Options {
  double abs_tol = 1e-11;
  double rel_tol = 0.0;
  std::size_t max_panels = 4000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration of a complex-valued f
/// over [breaks.front(), breaks.back()]. The breakpoints seed the initial
/// panels; the panel with the largest error estimate is bisected until the
/// summed estimate meets the tolerance.
Result integrate(const std::function<std::complex<double>(double)>& f, std::span<const double> breaks,
                 const Options& opts = {});

}  // namespace hypergroup::quadrature
