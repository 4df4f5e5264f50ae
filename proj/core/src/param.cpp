#include "hypergroup/param.hpp"

#include <cmath>
#include <cstdio>

#include "hypergroup/error.hpp"

namespace hypergroup {

Param::Param(Rational r) : exact_(std::move(r)) {
  if (*exact_ == 1) throw DomainError("parameter r = 1 is excluded");
  value_ = exact_->get_d();
  hypergroup_ = *exact_ >= 0 && *exact_ * 2 <= 1;
}

Param::Param(double r) : value_(r) {
  if (!std::isfinite(r)) throw DomainError("parameter r must be finite");
  if (r == 1.0) throw DomainError("parameter r = 1 is excluded");
  hypergroup_ = r >= 0.0 && r <= 0.5;
}

Param Param::parse(std::string_view text) { return Param(parse_rational(text)); }

const Rational& Param::exact() const {
  if (!exact_) throw DomainError("exact rational parameter required, got float r = " + to_string());
  return *exact_;
}

double Param::cut_radius() const noexcept { return 2.0 * std::sqrt(value_ * (1.0 - value_)); }

double Param::critical_modulus() const {
  if (value_ <= 0.0) throw DomainError("critical modulus needs r > 0");
  return std::sqrt((1.0 - value_) / value_);
}

std::string Param::to_string() const {
  if (exact_) return hypergroup::to_string(*exact_);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

void require_open_hypergroup(const Param& r, const char* operation) {
  if (!(r.value() > 0.0 && r.hypergroup()))
    throw DomainError(std::string(operation) + " requires 0 < r <= 1/2, got r = " + r.to_string());
}

}  // namespace hypergroup
