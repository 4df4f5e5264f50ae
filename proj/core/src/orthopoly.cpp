#include "hypergroup/orthopoly.hpp"

#include <algorithm>
#include <cmath>

#include "hypergroup/error.hpp"

namespace hypergroup::orthopoly {

namespace {

template <class T>
T forward_recurrence(Degree n, T t, double r) {
  algebra::ExactElement::check_degree(n);
  if (n == 0) return T(1);
  T prev(1);
  T cur = t;
  const double inv = 1.0 / (1.0 - r);
  for (Degree k = 1; k < n; ++k) {
    T next = (t * cur - r * prev) * inv;
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx ipow(cplx base, Degree n) {
  cplx result(1.0, 0.0);
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

constexpr double kDegenerateTol = 1e-14;

}  // namespace

cplx eval_P(Degree n, cplx t, const Param& r) { return forward_recurrence(n, t, r.value()); }

double eval_P(Degree n, double t, const Param& r) { return forward_recurrence(n, t, r.value()); }

Rational eval_P_exact(Degree n, const Rational& t, const Param& param) {
  algebra::ExactElement::check_degree(n);
  const Rational& r = param.exact();
  if (n == 0) return Rational(1);
  const Rational inv = 1 / Rational(1 - r);
  Rational prev(1);
  Rational cur = t;
  for (Degree k = 1; k < n; ++k) {
    Rational next = (t * cur - r * prev) * inv;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

PolySeq::PolySeq(const Param& r) : r_(r) {
  r_.exact();
  rows_.push_back({Rational(1)});
  rows_.push_back({Rational(0), Rational(1)});
}

void PolySeq::extend_to(Degree n) const {
  const Rational& r = r_.exact();
  const Rational inv = 1 / Rational(1 - r);
  while (static_cast<Degree>(rows_.size()) <= n) {
    const auto& p1 = rows_[rows_.size() - 1];
    const auto& p0 = rows_[rows_.size() - 2];
    std::vector<Rational> next(p1.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p1.size(); ++i) next[i + 1] += p1[i];
    for (std::size_t i = 0; i < p0.size(); ++i) next[i] -= r * p0[i];
    for (auto& c : next) c *= inv;
    rows_.push_back(std::move(next));
  }
}

std::vector<Rational> PolySeq::row(Degree n) const {
  algebra::ExactElement::check_degree(n);
  std::lock_guard lock(mutex_);
  extend_to(n);
  return rows_[static_cast<std::size_t>(n)];
}

std::vector<Rational> coeffs_P(Degree n, const Param& r) { return PolySeq(r).row(n); }

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& t) {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

cplx evaluate(const std::vector<Rational>& coeffs, cplx t) {
  // Horner in exact Gaussian rationals, rounded once: the monomial form cancels
  // heavily in floating point for large n.
  const Rational tr = from_double(t.real()), ti = from_double(t.imag());
  Rational re = 0, im = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    Rational next_re = re * tr - im * ti + *it;
    im = re * ti + im * tr;
    re = std::move(next_re);
  }
  return {to_double(re), to_double(im)};
}

cplx gen_fun(cplx z, cplx t, const Param& param) {
  const double r = param.value();
  const cplx num = (1.0 - r) - r * z * t;
  const cplx den = (1.0 - r) - z * t + r * z * z;
  const double scale = std::abs(1.0 - r) + std::abs(z * t) + std::abs(r * z * z);
  if (std::abs(den) <= 1e-15 * scale) throw SingularityError("generating function pole", z, t);
  return num / den;
}

GammaPair gammas(cplx c, const Param& param) {
  const double r = param.value();
  const cplx disc = c * c - param.cut_radius_sq();
  GammaPair g;
  g.degenerate = std::abs(disc) <= kDegenerateTol * std::max(1.0, std::norm(c));
  const cplx root = g.degenerate ? cplx(0.0) : std::sqrt(disc);
  const double denom = 2.0 * (1.0 - r);
  g.gamma_plus = (c + root) / denom;
  g.gamma_minus = (c - root) / denom;
  return g;
}

cplx point_functional(cplx c, Degree n, const Param& param) {
  algebra::ExactElement::check_degree(n);
  const auto g = gammas(c, param);
  if (g.degenerate) {
    // Double root: phi_n = (1 + b n) g^n with b fixed by phi_1 = c.
    const double b = 1.0 - 2.0 * param.value();
    return (1.0 + b * static_cast<double>(n)) * ipow(g.gamma_plus, n);
  }
  const cplx span = g.gamma_plus - g.gamma_minus;
  const cplx alpha = (c - g.gamma_minus) / span;
  const cplx beta = (g.gamma_plus - c) / span;
  return alpha * ipow(g.gamma_plus, n) + beta * ipow(g.gamma_minus, n);
}

bool is_bounded_char(cplx c, const Param& r) {
  require_open_hypergroup(r, "is_bounded_char");
  // The unit circle |g| = 1 maps onto the ellipse x^2 + (y / (1 - 2r))^2 = 1,
  // so both roots lie in the closed disk iff c lies in the filled ellipse.
  const double minor = 1.0 - 2.0 * r.value();
  if (c.imag() == 0.0) return std::abs(c.real()) <= 1.0;
  if (minor <= 0.0) return false;
  const double y = c.imag() / minor;
  return c.real() * c.real() + y * y <= 1.0;
}

}  // namespace hypergroup::orthopoly
