#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypergroup/algebra.hpp"
#include "hypergroup/param.hpp"
#include "hypergroup/rational.hpp"

namespace hypergroup::spectra {

using algebra::Degree;
using cplx = std::complex<double>;

/// The parameter lambda of a geometric-series functional phi_n = lambda^{-n}.
///
/// The float value drives numerics. When lambda is known exactly (a rational,
/// or +-sqrt(q) for rational q) the exact data lets classification decide the
/// measure-zero boundaries |lambda| = 1 and |lambda|^2 = (1 - r) / r without
/// tolerances.
struct Lambda {
  cplx value;
  std::optional<Rational> exact;       ///< lambda itself, when it is a rational real
  std::optional<Rational> modulus_sq;  ///< |lambda|^2, when known exactly

  static Lambda from(cplx v);
  static Lambda rational(const Rational& q);
  /// sign * sqrt(q), q > 0.
  static Lambda sqrt_of(const Rational& q, int sign = 1);

  /// Accepted forms: "3/2", "-1.5", "1.0+1.0i", "-2i", "sqrt(3)", "-sqrt(3)",
  /// and polar "MOD@DEG" (e.g. "sqrt(3)@45" or "2@30"), angle in degrees.
  static Lambda parse(std::string_view text);

  bool is_real() const noexcept { return value.imag() == 0.0; }
  std::string to_string() const;
};

/// A linear functional phi on the algebra, given through phi_n = phi(h_n).
class FunctionalSpec {
 public:
  struct Geometric {
    cplx lambda;
  };
  struct PointEval {
    cplx c;
  };
  struct DeltaAt0 {};
  struct FiniteSeq {
    std::vector<cplx> values;
  };
  using Variant = std::variant<Geometric, PointEval, DeltaAt0, FiniteSeq>;

  static FunctionalSpec geometric(cplx lambda);
  static FunctionalSpec point_eval(cplx c);
  static FunctionalSpec delta_at_0();
  static FunctionalSpec finite(std::vector<cplx> values);

  const Variant& variant() const noexcept { return v_; }
  std::string family() const;

  /// phi(h_n).
  cplx phi_n(Degree n, const Param& r) const;

  /// sum_n phi_n z^n in closed form, continued analytically past the radius
  /// of convergence. Throws SingularityError at a pole.
  cplx phi(cplx z, const Param& r) const;

  /// Radius of convergence of the power series (infinity for entire phi).
  double radius(const Param& r) const;

  /// Real points in [-1, 1] where the representing measure may carry an atom.
  std::vector<double> atom_candidates(const Param& r) const;

 private:
  explicit FunctionalSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// c_r(lambda) = r lambda + (1 - r) / lambda.
cplx c_r(cplx lambda, const Param& r);
Rational c_r(const Rational& lambda, const Param& r);

}  // namespace hypergroup::spectra
