#pragma once

#include <complex>
#include <deque>
#include <mutex>
#include <vector>

#include "hypergroup/algebra.hpp"
#include "hypergroup/param.hpp"
#include "hypergroup/rational.hpp"

namespace hypergroup::orthopoly {

using algebra::Degree;
using cplx = std::complex<double>;

/// P_n(t) by the forward recurrence P_{n+1} = (t P_n - r P_{n-1}) / (1 - r).
///
/// For 0 <= r <= 1/2 and t in [-1, 1] the values stay in [-1, 1]; elsewhere
/// they grow geometrically and no stabilization is attempted.
cplx eval_P(Degree n, cplx t, const Param& r);
double eval_P(Degree n, double t, const Param& r);

/// Exact value at a rational point (exact parameter required).
Rational eval_P_exact(Degree n, const Rational& t, const Param& r);

/// Monomial coefficient rows of P_0, P_1, ... for one exact parameter.
/// Rows are computed on demand and never change once appended, so
/// concurrent readers may share one instance.
class PolySeq {
 public:
  explicit PolySeq(const Param& r);

  /// Coefficients c_0..c_n of P_n, lowest degree first.
  std::vector<Rational> row(Degree n) const;
  const Param& param() const noexcept { return r_; }

 private:
  void extend_to(Degree n) const;

  Param r_;
  mutable std::mutex mutex_;
  mutable std::deque<std::vector<Rational>> rows_;
};

std::vector<Rational> coeffs_P(Degree n, const Param& r);

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& t);
/// Exact evaluation at the binary value of t, rounded once at the end.
cplx evaluate(const std::vector<Rational>& coeffs, cplx t);

/// Closed form of sum_n z^n P_n(t): (1 - r - r z t) / (1 - r - z t + r z^2).
/// Throws SingularityError at a zero of the denominator.
cplx gen_fun(cplx z, cplx t, const Param& r);

/// Roots of (1 - r) g^2 - c g + r = 0, which govern phi(h_n) for the character at c.
struct GammaPair {
  cplx gamma_plus;
  cplx gamma_minus;
  bool degenerate = false;  ///< c^2 == 4 r (1 - r) up to the detection tolerance
};

GammaPair gammas(cplx c, const Param& r);

/// phi(h_n) for the character h_1 -> c, via alpha g_+^n + beta g_-^n
/// (or (1 + (1 - 2r) n) g^n at a double root). Agrees with eval_P(n, c, r).
cplx point_functional(cplx c, Degree n, const Param& r);

/// True iff both |g_+| and |g_-| are at most one, i.e. {phi(h_n)} is bounded.
/// Decided by membership in the filled ellipse with semi-axes 1 and 1 - 2r
/// (the segment [-1, 1] at r = 1/2). Defined for 0 < r <= 1/2.
bool is_bounded_char(cplx c, const Param& r);

}  // namespace hypergroup::orthopoly
