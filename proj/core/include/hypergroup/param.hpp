#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hypergroup/rational.hpp"

namespace hypergroup {

/// The recurrence parameter r of t P_n = r P_{n-1} + (1-r) P_{n+1}.
///
/// Any r != 1 defines the algebra; the structure constants form a
/// probability distribution (a hypergroup) exactly when 0 <= r <= 1/2.
/// A Param built from a Rational keeps the exact value next to its double
/// view; a Param built from a double is float-only and refuses exact paths.
class Param {
 public:
  explicit Param(Rational r);
  explicit Param(double r);

  /// Accepts the same forms as parse_rational; the result is always exact.
  static Param parse(std::string_view text);

  double value() const noexcept { return value_; }
  bool is_exact() const noexcept { return exact_.has_value(); }

  /// Throws DomainError when the parameter was given as a float.
  const Rational& exact() const;

  /// True iff 0 <= r <= 1/2.
  bool hypergroup() const noexcept { return hypergroup_; }

  /// 4 r (1 - r), the squared half-width of the cut I_r.
  double cut_radius_sq() const noexcept { return 4.0 * value_ * (1.0 - value_); }
  /// 2 sqrt(r (1 - r)).
  double cut_radius() const noexcept;
  /// sqrt((1 - r) / r): the modulus separating the two inverse branches of w(z).
  double critical_modulus() const;

  std::string to_string() const;

 private:
  std::optional<Rational> exact_;
  double value_;
  bool hypergroup_;
};

/// Throws DomainError unless 0 < r <= 1/2.
void require_open_hypergroup(const Param& r, const char* operation);

}  // namespace hypergroup
