#include "hypergroup/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hypergroup/error.hpp"

namespace hypergroup::transform {

namespace {

void require_hypergroup(const Param& r, const char* op) {
  if (!r.hypergroup()) throw DomainError(std::string(op) + " requires 0 <= r <= 1/2, got r = " + r.to_string());
}

bool on_real_segment(cplx w, double half_width) { return w.imag() == 0.0 && std::abs(w.real()) <= half_width; }

struct Extrapolation {
  cplx value;
  double residual;
};

// Successive Richardson elimination of eps^p terms, one pass per exponent.
Extrapolation richardson(std::vector<cplx> seq, const std::vector<double>& eps, std::initializer_list<double> powers) {
  std::vector<double> h = eps;
  for (double p : powers) {
    std::vector<cplx> next;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
      const double a = std::pow(h[k], p);
      const double b = std::pow(h[k + 1], p);
      next.push_back((seq[k + 1] * a - seq[k] * b) / (a - b));
    }
    seq = std::move(next);
    h.erase(h.begin());
  }
  return {seq.back(), std::abs(seq.back() - seq[seq.size() - 2])};
}

void check_schedule(const EpsilonSchedule& s, std::size_t needed) {
  if (s.eps.size() < needed) throw DomainError("epsilon schedule needs at least " + std::to_string(needed) + " entries");
  for (std::size_t k = 0; k < s.eps.size(); ++k) {
    if (!(s.eps[k] > 0.0)) throw DomainError("epsilon schedule entries must be positive");
    if (k > 0 && !(s.eps[k] < s.eps[k - 1])) throw DomainError("epsilon schedule must be strictly decreasing");
  }
}

}  // namespace

cplx sqrt_branch(cplx w, const Param& r, CutSide side) {
  require_hypergroup(r, "sqrt_branch");
  const double a = r.cut_radius();
  if (w.imag() == 0.0) {
    const double t = w.real();
    if (t >= a) return {std::sqrt((t - a) * (t + a)), 0.0};
    if (t <= -a) return {-std::sqrt((t - a) * (t + a)), 0.0};
    if (side == CutSide::off_cut) throw DomainError("w = " + std::to_string(t) + " lies inside the cut; choose a side");
    const double im = std::sqrt((a - t) * (a + t));
    return {0.0, side == CutSide::above ? im : -im};
  }
  return std::sqrt(w - a) * std::sqrt(w + a);
}

cplx w_of_z(cplx z, const Param& r) {
  if (z == cplx(0.0)) throw DomainError("w(z) has a pole at z = 0");
  const double rv = r.value();
  return rv * z + (1.0 - rv) / z;
}

cplx z_of_w(cplx w, const Param& r, Branch branch) {
  require_hypergroup(r, "z_of_w");
  if (r.value() == 0.0) throw DomainError("z_of_w is undefined at r = 0; the r = 0 transform uses z = 1/w");
  if (on_real_segment(w, r.cut_radius())) throw DomainError("w lies on the cut I_r");
  const double rv = r.value();
  const cplx sum = w + sqrt_branch(w, r);
  // The inner root is written through the product of roots (1 - r) / r to avoid cancellation.
  return branch == Branch::outer ? sum / (2.0 * rv) : 2.0 * (1.0 - rv) / sum;
}

bool in_region_Dr(cplx z, const Param& r) {
  require_open_hypergroup(r, "in_region_Dr");
  const double radius = r.critical_modulus();
  if (!(std::abs(z) < radius)) return false;
  if (z.imag() == 0.0) {
    const double x = z.real();
    if (x >= 1.0 && x < radius) return false;
    if (x <= -1.0 && x > -radius) return false;
  }
  return true;
}

cplx cauchy_kernel(cplx w, const Param& r) {
  const double rv = r.value();
  return 2.0 / ((2.0 * rv - 1.0) * w - sqrt_branch(w, r));
}

cplx cauchy_C(cplx w, const FunctionalSpec& phi, const Param& r) {
  require_hypergroup(r, "cauchy_C");
  if (on_real_segment(w, 1.0)) throw DomainError("Cauchy transform is evaluated off [-1, 1]");
  const cplx phi0 = phi.phi_n(0, r);
  if (r.value() == 0.0) {
    const cplx z = 1.0 / w;
    return -z * phi.phi(z, r);
  }
  const cplx z = z_of_w(w, r, Branch::inner);
  return cauchy_kernel(w, r) * (phi.phi(z, r) - r.value() * phi0);
}

EpsilonSchedule EpsilonSchedule::standard() { return halving(1e-2, 9); }

EpsilonSchedule EpsilonSchedule::halving(double first, std::size_t count) {
  EpsilonSchedule s;
  for (std::size_t k = 0; k < count; ++k) s.eps.push_back(std::ldexp(first, -static_cast<int>(k)));
  return s;
}

double EpsilonSchedule::largest() const { return eps.empty() ? 0.0 : *std::max_element(eps.begin(), eps.end()); }

DensitySample stieltjes_density(const FunctionalSpec& phi, const Param& r, double t, const EpsilonSchedule& schedule,
                                const InversionTolerances& tol) {
  check_schedule(schedule, 3);
  DensitySample out;
  out.t = t;
  const cplx two_pi_i(0.0, 2.0 * std::numbers::pi);
  std::vector<cplx> seq;
  try {
    for (double e : schedule.eps) seq.push_back((cauchy_C({t, e}, phi, r) - cauchy_C({t, -e}, phi, r)) / two_pi_i);
  } catch (const SingularityError&) {
    out.residual = std::numeric_limits<double>::infinity();
    return out;
  }
  const auto ex = richardson(std::move(seq), schedule.eps, {1.0});
  out.density = ex.value;
  out.residual = ex.residual;
  out.converged = std::isfinite(ex.residual) && ex.residual <= tol.density_residual;
  return out;
}

AtomEstimate detect_atom(const FunctionalSpec& phi, const Param& r, double t0, const EpsilonSchedule& schedule,
                         const InversionTolerances& tol) {
  check_schedule(schedule, 4);
  if (!(t0 >= -1.0 && t0 <= 1.0)) throw DomainError("atom location must lie in [-1, 1]");
  AtomEstimate out;
  out.location = t0;
  std::vector<cplx> seq;
  try {
    for (double e : schedule.eps) seq.push_back(cplx(0.0, -e) * cauchy_C({t0, e}, phi, r));
  } catch (const SingularityError&) {
    out.residual = std::numeric_limits<double>::infinity();
    return out;
  }
  // Off the cut the regular part of the transform is analytic at t0, so the error
  // is a power series in eps. On the cut or at its ends an eps^{1/2} term appears.
  const bool off_cut = r.value() > 0.0 && std::abs(t0) > r.cut_radius();
  const auto ex = off_cut ? richardson(std::move(seq), schedule.eps, {1.0, 2.0})
                          : richardson(std::move(seq), schedule.eps, {0.5, 1.0});
  out.residual = ex.residual;
  out.converged = std::isfinite(ex.residual) && ex.residual <= tol.atom_residual;
  // An estimate no larger than its own residual is indistinguishable from zero.
  const bool significant = std::abs(ex.value) >= tol.atom_threshold && std::abs(ex.value) > ex.residual;
  out.weight = significant ? ex.value : cplx(0.0);
  out.present = out.converged && out.weight != cplx(0.0);
  return out;
}

bool InversionResult::densities_converged() const {
  return std::all_of(grid.begin(), grid.end(), [](const DensitySample& s) { return s.converged; });
}

double InversionResult::max_residual() const {
  double m = 0.0;
  for (const auto& s : grid) m = std::max(m, s.residual);
  return m;
}

InversionResult invert(const FunctionalSpec& phi, const Param& r, std::span<const double> points,
                       const EpsilonSchedule& schedule, const InversionTolerances& tol) {
  InversionResult out;
  out.epsilon_schedule = schedule.eps;
  out.exclusion_radius = 10.0 * schedule.largest();
  for (double t0 : phi.atom_candidates(r)) out.atoms.push_back(detect_atom(phi, r, t0, schedule, tol));
  for (double t : points) {
    const bool near_atom = std::any_of(out.atoms.begin(), out.atoms.end(), [&](const AtomEstimate& a) {
      return a.present && std::abs(a.location - t) < out.exclusion_radius;
    });
    if (near_atom) {
      ++out.excluded_points;
      continue;
    }
    out.grid.push_back(stieltjes_density(phi, r, t, schedule, tol));
  }
  return out;
}

std::vector<double> interior_grid(const Param& r, std::size_t count, double band) {
  if (count < 2) throw DomainError("interior grid needs at least two points");
  if (!(band >= 0.0 && band < 0.5)) throw DomainError("band fraction must lie in [0, 1/2)");
  const double a = r.cut_radius();
  const double lo = -a + 2.0 * a * band;
  const double hi = a - 2.0 * a * band;
  std::vector<double> ts(count);
  for (std::size_t j = 0; j < count; ++j) ts[j] = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(count - 1);
  return ts;
}

}  // namespace hypergroup::transform
