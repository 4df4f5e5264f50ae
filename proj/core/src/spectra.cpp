#include "hypergroup/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypergroup/error.hpp"
#include "hypergroup/orthopoly.hpp"

namespace hypergroup::spectra {

namespace {

constexpr double kBoundaryTol = 1e-12;

int sign_of(const Rational& q) { return sgn(q); }

int compare_with_tol(double x, double tol) {
  if (std::abs(x) <= tol) return 0;
  return x < 0 ? -1 : 1;
}

}  // namespace

const char* to_string(Case c) noexcept {
  switch (c) {
    case Case::not_in_astar:
      return "NotInAstar";
    case Case::continuous_only:
      return "ContinuousOnly";
    case Case::continuous_plus_atom:
      return "ContinuousPlusAtom";
    case Case::dirac_at_edge:
      return "DiracAtEdge";
  }
  return "unknown";
}

Regime classify(const Lambda& lambda, const Param& r) {
  require_open_hypergroup(r, "classify");
  if (lambda.value == cplx(0.0)) throw DomainError("classify needs lambda != 0");

  const double rv = r.value();
  const double mod = std::abs(lambda.value);
  const bool real = lambda.is_real();
  Regime reg;
  reg.proximity.modulus_gap = std::norm(lambda.value) * rv / (1.0 - rv) - 1.0;
  reg.proximity.unit_gap = mod - 1.0;

  // Sign of |lambda|^2 - (1 - r) / r.
  int vs_critical;
  if (lambda.modulus_sq && r.is_exact()) {
    const Rational& q = r.exact();
    vs_critical = sign_of(Rational(*lambda.modulus_sq * q - (1 - q)));
    reg.proximity.exact = true;
  } else {
    vs_critical = compare_with_tol(reg.proximity.modulus_gap, kBoundaryTol);
  }

  // lambda = +-1 exactly?
  bool unit_real;
  if (lambda.exact) {
    unit_real = abs(*lambda.exact) == 1;
  } else if (lambda.modulus_sq && real) {
    unit_real = *lambda.modulus_sq == 1;
  } else if (!real) {
    unit_real = false;
  } else {
    unit_real = real && std::abs(mod - 1.0) <= kBoundaryTol;
    reg.proximity.exact = false;
  }

  reg.reduced_continuous = vs_critical >= 0;
  if (unit_real) {
    reg.kind = Case::dirac_at_edge;
  } else if (vs_critical > 0) {
    reg.kind = Case::continuous_only;
  } else if (vs_critical == 0) {
    if (real) {
      reg.kind = Case::continuous_only;
    } else {
      reg.kind = Case::not_in_astar;
      reg.note = "non-real lambda on the critical circle: c_r(lambda) falls inside I_r";
    }
  } else if (real && (lambda.modulus_sq ? *lambda.modulus_sq > 1 : mod > 1.0)) {
    reg.kind = Case::continuous_plus_atom;
  } else {
    reg.kind = Case::not_in_astar;
    reg.note = real ? "real lambda with |lambda| < 1: c_r(lambda) lies outside [-1, 1]"
                    : "non-real lambda inside the critical circle";
  }
  return reg;
}

std::complex<double> SpectralMeasure::density(double t) const {
  if (!has_continuous_part()) return 0.0;
  const double a = r.cut_radius();
  if (!(std::abs(t) < a)) return 0.0;
  const double root = std::sqrt((a - t) * (a + t));
  cplx value = density_scale * root / ((1.0 - t) * (1.0 + t));
  if (pole) value /= (*pole - t);
  return value;
}

std::complex<double> SpectralMeasure::density_theta(double theta) const {
  if (!has_continuous_part()) return 0.0;
  const double rv = r.value();
  const double a = r.cut_radius();
  const double a2 = 4.0 * rv * (1.0 - rv);
  const double s = std::sin(theta);
  const double one_minus_a2 = (1.0 - 2.0 * rv) * (1.0 - 2.0 * rv);
  cplx value = density_scale * (a2 * s * s) / (one_minus_a2 + a2 * s * s);
  if (pole) {
    const cplx p = *pole;
    cplx gap;
    if (p.real() >= 0.0) {
      const double sh = std::sin(0.5 * theta);
      gap = (p - a) + 2.0 * a * sh * sh;
    } else {
      const double ch = std::cos(0.5 * theta);
      gap = (p + a) - 2.0 * a * ch * ch;
    }
    value /= gap;
  }
  return value;
}

SpectralMeasure plancherel_measure(const Param& r) {
  require_open_hypergroup(r, "plancherel_measure");
  const double a = r.cut_radius();
  return SpectralMeasure{
      .family = "plancherel",
      .r = r,
      .lambda = std::nullopt,
      .support = {-a, a},
      .density_scale = 1.0 / (2.0 * std::numbers::pi * r.value()),
      .pole = std::nullopt,
      .atoms = {},
      .total_mass_expected = 1.0,
  };
}

SpectralMeasure geometric_measure(const Lambda& lambda, const Param& r) {
  const Regime reg = classify(lambda, r);
  if (reg.kind == Case::not_in_astar)
    throw RegimeError("lambda = " + lambda.to_string() + " at r = " + r.to_string() +
                      " does not define a bounded functional (" + reg.note + ")");

  SpectralMeasure mu{
      .family = "geometric",
      .r = r,
      .lambda = lambda,
      .support = {},
      .density_scale = 0.0,
      .pole = std::nullopt,
      .atoms = {},
      .total_mass_expected = 1.0,
  };

  if (reg.kind == Case::dirac_at_edge) {
    // C(w) = 1 / (c_r(+-1) - w) = 1 / (+-1 - w): a unit atom, no density.
    const int sign = lambda.value.real() > 0 ? 1 : -1;
    mu.support = {double(sign), double(sign)};
    mu.atoms.push_back(Atom{double(sign), 1.0, Rational(sign), Rational(1)});
    return mu;
  }

  const double a = r.cut_radius();
  const cplx l = lambda.value;
  mu.support = {-a, a};
  mu.density_scale = (l - 1.0 / l) / (2.0 * std::numbers::pi);
  mu.pole = c_r(l, r);

  if (reg.kind == Case::continuous_plus_atom) {
    Atom atom;
    const double rv = r.value();
    const double c = mu.pole->real();
    atom.location = c;
    const double c_sq_lambda = rv * l.real() * l.real() + (1.0 - rv) / (l.real() * l.real());
    atom.weight = (1.0 - c_sq_lambda) / (1.0 - c * c);
    if (r.is_exact() && lambda.exact) {
      const Rational loc = c_r(*lambda.exact, r);
      const Rational sq(*lambda.exact * *lambda.exact);
      atom.exact_location = loc;
      atom.exact_weight = Rational((1 - c_r(sq, r)) / (1 - loc * loc));
    } else if (r.is_exact() && lambda.modulus_sq) {
      // c_r(lambda)^2 = r^2 q + 2 r (1 - r) + (1 - r)^2 / q with q = lambda^2.
      const Rational& q = *lambda.modulus_sq;
      const Rational& rq = r.exact();
      const Rational s = 1 - rq;
      const Rational c2 = rq * rq * q + 2 * rq * s + s * s / q;
      atom.exact_weight = Rational((1 - (rq * q + s / q)) / (1 - c2));
    }
    if (atom.exact_weight) atom.weight = atom.exact_weight->get_d();
    if (atom.exact_location) atom.location = atom.exact_location->get_d();
    mu.atoms.push_back(std::move(atom));
  }
  return mu;
}

SpectralMeasure point_measure(double c, const Param& r) {
  require_open_hypergroup(r, "point_measure");
  if (!(std::abs(c) <= 1.0))
    throw RegimeError("the character at c = " + std::to_string(c) + " is unbounded; no measure on [-1, 1]");
  return SpectralMeasure{
      .family = "point",
      .r = r,
      .lambda = std::nullopt,
      .support = {c, c},
      .density_scale = 0.0,
      .pole = std::nullopt,
      .atoms = {Atom{c, 1.0, std::nullopt, Rational(1)}},
      .total_mass_expected = 1.0,
  };
}

SpectralMeasure measure_for(const FunctionalSpec& phi, const Param& r) {
  return std::visit(
      [&](const auto& v) -> SpectralMeasure {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FunctionalSpec::Geometric>) {
          return geometric_measure(Lambda::from(v.lambda), r);
        } else if constexpr (std::is_same_v<T, FunctionalSpec::PointEval>) {
          if (v.c.imag() != 0.0) throw RegimeError("non-real character has no positive representing measure");
          return point_measure(v.c.real(), r);
        } else if constexpr (std::is_same_v<T, FunctionalSpec::DeltaAt0>) {
          return plancherel_measure(r);
        } else {
          throw RegimeError("no closed-form measure for finite sequences");
        }
      },
      phi.variant());
}

std::vector<double> theta_breakpoints(const SpectralMeasure& mu) {
  constexpr double pi = std::numbers::pi;
  std::vector<double> br = {0.0, 0.25 * pi, 0.5 * pi, 0.75 * pi, pi};
  if (mu.pole) {
    const double a = mu.r.cut_radius();
    const cplx p = *mu.pole;
    const bool right = p.real() >= 0.0;
    const double gap = std::abs(right ? p - a : p + a);
    if (gap < 0.5 * a) {
      for (int k = 1; k <= 40; ++k) {
        const double h = 0.25 * pi * std::ldexp(1.0, -k);
        br.push_back(right ? h : pi - h);
      }
      std::sort(br.begin(), br.end());
    }
  }
  return br;
}

MomentResult moment(const SpectralMeasure& mu, Degree n, const quadrature::Options& opts) {
  algebra::ExactElement::check_degree(n);
  MomentResult out;
  out.converged = true;
  if (mu.has_continuous_part()) {
    const double a = mu.r.cut_radius();
    const Param& r = mu.r;
    auto f = [&](double theta) { return orthopoly::eval_P(n, a * std::cos(theta), r) * mu.density_theta(theta); };
    const auto br = theta_breakpoints(mu);
    const auto q = quadrature::integrate(f, br, opts);
    out.continuous = q.value;
    out.error_estimate = q.error_estimate;
    out.converged = q.converged;
  }
  for (const auto& atom : mu.atoms) {
    if (atom.exact_location && mu.r.is_exact()) {
      const Rational pn = orthopoly::eval_P_exact(n, *atom.exact_location, mu.r);
      if (atom.exact_weight)
        out.atomic += Rational(pn * *atom.exact_weight).get_d();
      else
        out.atomic += pn.get_d() * atom.weight;
    } else {
      out.atomic += orthopoly::eval_P(n, atom.location, mu.r) * atom.weight;
    }
  }
  out.value = out.continuous + out.atomic;
  return out;
}

namespace {

VerificationReport verify(const SpectralMeasure& mu, const FunctionalSpec& phi, const Param& r, Degree max_degree,
                          double tol) {
  VerificationReport rep;
  rep.family = mu.family;
  rep.tol = tol;
  rep.pass = true;
  for (Degree n = 0; n <= max_degree; ++n) {
    MomentRow row;
    row.n = n;
    row.expected = phi.phi_n(n, r);
    const auto m = moment(mu, n);
    row.computed = m.value;
    row.abs_error = std::abs(row.computed - row.expected);
    if (!(row.abs_error <= tol)) rep.pass = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace

VerificationReport verify_functional(const FunctionalSpec& phi, const Param& r, Degree max_degree, double tol) {
  const auto mu = measure_for(phi, r);
  auto rep = verify(mu, phi, r, max_degree, tol);
  if (auto g = std::get_if<FunctionalSpec::Geometric>(&phi.variant())) rep.regime = classify(Lambda::from(g->lambda), r);
  return rep;
}

VerificationReport verify_functional(const Lambda& lambda, const Param& r, Degree max_degree, double tol) {
  const auto mu = geometric_measure(lambda, r);
  auto rep = verify(mu, FunctionalSpec::geometric(lambda.value), r, max_degree, tol);
  rep.regime = classify(lambda, r);
  return rep;
}

PositivityReport positivity_report(const Lambda& lambda, const Param& r, std::size_t scan_points) {
  const auto mu = geometric_measure(lambda, r);
  PositivityReport rep;
  rep.real = lambda.is_real();
  rep.positive = rep.real && std::abs(lambda.value) >= 1.0;

  const double a = r.cut_radius();
  double max_abs = 0.0;
  rep.min_density_re = 0.0;
  rep.max_density_im = 0.0;
  bool first = true;
  for (std::size_t j = 0; j < scan_points && mu.has_continuous_part(); ++j) {
    const double theta = std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(scan_points);
    const cplx d = mu.density(a * std::cos(theta));
    max_abs = std::max(max_abs, std::abs(d));
    rep.max_density_im = std::max(rep.max_density_im, std::abs(d.imag()));
    rep.min_density_re = first ? d.real() : std::min(rep.min_density_re, d.real());
    first = false;
  }
  const double tiny = 1e-12 * std::max(1.0, max_abs);
  bool scan_real = rep.max_density_im <= tiny;
  bool scan_positive = rep.min_density_re >= -tiny;
  for (const auto& atom : mu.atoms) {
    scan_real = scan_real && std::abs(atom.weight.imag()) <= tiny;
    scan_positive = scan_positive && atom.weight.real() > 0.0;
  }
  scan_positive = scan_positive && scan_real;
  rep.scan_agrees = scan_real == rep.real && scan_positive == rep.positive;
  return rep;
}

}  // namespace hypergroup::spectra
