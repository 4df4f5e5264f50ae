#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hypergroup/functional.hpp"
#include "hypergroup/param.hpp"
#include "hypergroup/quadrature.hpp"
#include "hypergroup/rational.hpp"

namespace hypergroup::spectra {

/// Which case of the geometric-series classification (lambda, r) falls into.
enum class Case {
  not_in_astar,          ///< no representing measure on [-1, 1]
  continuous_only,       ///< |lambda| >= sqrt((1-r)/r): density on I_r
  continuous_plus_atom,  ///< real 1 < |lambda| < sqrt((1-r)/r): density plus an atom at c_r(lambda)
  dirac_at_edge,         ///< lambda = +-1: a unit atom at +-1
};

const char* to_string(Case c) noexcept;

struct BoundaryProximity {
  double modulus_gap = 0.0;  ///< |lambda|^2 r / (1 - r) - 1
  double unit_gap = 0.0;     ///< |lambda| - 1
  bool exact = false;        ///< decided by exact arithmetic rather than a tolerance
};

struct Regime {
  Case kind = Case::not_in_astar;
  /// The extended functional is continuous on the reduced C*-algebra iff
  /// |lambda| >= sqrt((1 - r) / r).
  bool reduced_continuous = false;
  BoundaryProximity proximity;
  std::string note;
};

/// Needs 0 < r <= 1/2. Exact comparisons are used when r and |lambda|^2 are
/// exact; otherwise a relative tolerance of 1e-12 decides the boundaries.
Regime classify(const Lambda& lambda, const Param& r);

struct Atom {
  double location = 0.0;
  std::complex<double> weight;
  std::optional<Rational> exact_location;
  std::optional<Rational> exact_weight;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// A density on I_r of the shape scale * sqrt(a^2 - t^2) / ((1 - t^2) (pole - t))
/// (pole absent for the Plancherel family) plus finitely many atoms.
struct SpectralMeasure {
  std::string family;  ///< "plancherel", "geometric" or "point"
  Param r;
  std::optional<Lambda> lambda;
  Interval support;
  std::complex<double> density_scale;       ///< zero when there is no continuous part
  std::optional<std::complex<double>> pole;  ///< c_r(lambda) for the geometric family
  std::vector<Atom> atoms;
  std::complex<double> total_mass_expected{1.0, 0.0};

  bool has_continuous_part() const { return density_scale != std::complex<double>(0.0); }

  /// Density at t; zero outside I_r.
  std::complex<double> density(double t) const;

  /// density(a cos(theta)) * a sin(theta) for theta in [0, pi], written in a
  /// form free of cancellation at the cut endpoints.
  std::complex<double> density_theta(double theta) const;
};

SpectralMeasure plancherel_measure(const Param& r);

/// Throws RegimeError when classify() says not_in_astar.
SpectralMeasure geometric_measure(const Lambda& lambda, const Param& r);

/// The unit atom at c, which represents the character h_1 -> c for real c in [-1, 1].
SpectralMeasure point_measure(double c, const Param& r);

/// Measure for any representable FunctionalSpec; RegimeError otherwise.
SpectralMeasure measure_for(const FunctionalSpec& phi, const Param& r);

struct MomentResult {
  std::complex<double> value;
  std::complex<double> continuous;
  std::complex<double> atomic;
  double error_estimate = 0.0;
  bool converged = false;
};

/// int P_n dmu: the continuous part by adaptive quadrature after t = a cos(theta),
/// the atoms by direct evaluation (exactly when their data is exact).
MomentResult moment(const SpectralMeasure& mu, Degree n, const quadrature::Options& opts = {});

/// Breakpoints in theta, graded toward the cut endpoint nearest the density's pole.
std::vector<double> theta_breakpoints(const SpectralMeasure& mu);

struct MomentRow {
  Degree n = 0;
  std::complex<double> expected;
  std::complex<double> computed;
  double abs_error = 0.0;
};

struct VerificationReport {
  std::string family;
  std::optional<Regime> regime;  ///< present for geometric functionals
  std::vector<MomentRow> rows;
  double tol = 0.0;
  bool pass = false;
};

/// Compares int P_n dmu against phi_n for n <= max_degree.
VerificationReport verify_functional(const FunctionalSpec& phi, const Param& r, Degree max_degree, double tol);
VerificationReport verify_functional(const Lambda& lambda, const Param& r, Degree max_degree, double tol);

struct PositivityReport {
  bool real = false;
  bool positive = false;
  bool scan_agrees = false;   ///< a density/atom scan reproduces both flags
  double min_density_re = 0.0;
  double max_density_im = 0.0;
};

/// Needs classify(lambda, r) != not_in_astar.
PositivityReport positivity_report(const Lambda& lambda, const Param& r, std::size_t scan_points = 400);

}  // namespace hypergroup::spectra
