#pragma once

#include <complex>
#include <span>
#include <vector>

#include "hypergroup/functional.hpp"
#include "hypergroup/param.hpp"

namespace hypergroup::transform {

using cplx = std::complex<double>;
using spectra::FunctionalSpec;

/// Which boundary value to take when w lies on the real axis.
enum class CutSide { above, below, off_cut };

/// The two inverse branches of w = r z + (1 - r) / z.
enum class Branch { inner, outer };

/// sqrt(w^2 - 4 r (1 - r)), holomorphic off I_r = [-a, a] (a = 2 sqrt(r (1 - r)))
/// and asymptotic to w at infinity. Realized as sqrt(w - a) * sqrt(w + a) with
/// principal factors.
///
/// For real w the side selects the boundary value: +i sqrt(a^2 - t^2) from
/// above, -i sqrt(a^2 - t^2) from below, and +-sqrt(t^2 - a^2) outside the cut.
/// A real w strictly inside the cut with side == off_cut throws DomainError.
cplx sqrt_branch(cplx w, const Param& r, CutSide side = CutSide::off_cut);

/// w = r z + (1 - r) / z.
cplx w_of_z(cplx z, const Param& r);

/// Inverse of w_of_z. The inner branch lands in |z| < sqrt((1 - r) / r),
/// the outer one outside that circle. Needs r > 0 and w off I_r.
cplx z_of_w(cplx w, const Param& r, Branch branch);

/// Membership in the slit disk D_r = {|z| < sqrt((1-r)/r)} minus the real
/// slits [1, sqrt((1-r)/r)) and (-sqrt((1-r)/r), -1].
bool in_region_Dr(cplx z, const Param& r);

/// The kernel ((2r - 1) w + s) / (2 r (1 - r) (1 - w^2)), s = sqrt_branch(w),
/// evaluated in the equivalent form 2 / ((2r - 1) w - s). The two agree
/// identically; the second has no removable singularity at w = +-1.
cplx cauchy_kernel(cplx w, const Param& r);

/// Cauchy transform C(w) = int mu(dt) / (t - w) of the measure representing phi.
///
/// For r > 0: cauchy_kernel(w) * (phi(z) - r phi_0) with z on the inner branch.
/// For r = 0: -(1/w) phi(1/w). Throws DomainError for w on [-1, 1] and
/// SingularityError where the closed form of phi has a pole.
cplx cauchy_C(cplx w, const FunctionalSpec& phi, const Param& r);

/// Offsets eps_k used to approach the real axis.
struct EpsilonSchedule {
  std::vector<double> eps;

  /// eps_k = 1e-2 * 2^-k, k = 0..8.
  static EpsilonSchedule standard();
  /// eps_k = first * 2^-k, k = 0..count-1.
  static EpsilonSchedule halving(double first, std::size_t count);
  double largest() const;
};

struct InversionTolerances {
  double density_residual = 1e-5;  ///< above this a density sample is reported divergent
  double atom_threshold = 1e-8;    ///< weights below this are reported as zero
  double atom_residual = 1e-6;     ///< above this an atom estimate is reported non-convergent
};

struct DensitySample {
  double t = 0.0;
  cplx density;
  double residual = 0.0;  ///< difference of the last two extrapolants
  bool converged = false;
};

struct AtomEstimate {
  double location = 0.0;
  cplx weight;
  double residual = 0.0;
  bool converged = false;
  bool present = false;  ///< converged, |weight| above the threshold and above the residual
};

/// Extrapolated limit of (C(t + i eps) - C(t - i eps)) / (2 pi i).
/// Two-term Richardson in eps; a residual above tol.density_residual marks the
/// sample as divergent, which is how a non-measure shows up numerically.
DensitySample stieltjes_density(const FunctionalSpec& phi, const Param& r, double t,
                                const EpsilonSchedule& schedule = EpsilonSchedule::standard(),
                                const InversionTolerances& tol = {});

/// Extrapolated limit of -i eps C(t0 + i eps). The extrapolation removes
/// eps^{1/2} and eps error terms so that cut endpoints are handled as well.
AtomEstimate detect_atom(const FunctionalSpec& phi, const Param& r, double t0,
                         const EpsilonSchedule& schedule = EpsilonSchedule::standard(),
                         const InversionTolerances& tol = {});

struct InversionResult {
  std::vector<DensitySample> grid;
  std::vector<AtomEstimate> atoms;  ///< every candidate probed, present or not
  std::vector<double> epsilon_schedule;
  double exclusion_radius = 0.0;
  std::size_t excluded_points = 0;

  bool densities_converged() const;
  double max_residual() const;
};

/// Probes the functional's atom candidates, then samples the density on the
/// given points, skipping those within 10 * max(eps) of a detected atom.
InversionResult invert(const FunctionalSpec& phi, const Param& r, std::span<const double> points,
                       const EpsilonSchedule& schedule = EpsilonSchedule::standard(),
                       const InversionTolerances& tol = {});

/// count equally spaced points covering the central (1 - 2 * band) part of I_r.
std::vector<double> interior_grid(const Param& r, std::size_t count, double band = 0.05);

}  // namespace hypergroup::transform
