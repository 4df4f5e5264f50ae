#include "hypergroup/algebra.hpp"

#include <cmath>

namespace hypergroup::algebra {

bool ProductCache::lookup(Degree m, Degree n, const Rational& r, ExactElement& out) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(Key{m, n, r.get_str()});
  if (it == entries_.end()) return false;
  out = it->second;
  return true;
}

void ProductCache::store(Degree m, Degree n, const Rational& r, const ExactElement& value) {
  std::lock_guard lock(mutex_);
  if (capacity_ == 0) return;
  Key key{m, n, r.get_str()};
  if (entries_.count(key)) return;
  while (entries_.size() >= capacity_ && !order_.empty()) {
    entries_.erase(order_.front());
    order_.pop_front();
  }
  entries_.emplace(key, value);
  order_.push_back(std::move(key));
}

void ProductCache::clear() {
  std::lock_guard lock(mutex_);
  entries_.clear();
  order_.clear();
}

void ProductCache::set_capacity(std::size_t capacity) {
  std::lock_guard lock(mutex_);
  capacity_ = capacity;
  while (entries_.size() > capacity_ && !order_.empty()) {
    entries_.erase(order_.front());
    order_.pop_front();
  }
}

std::size_t ProductCache::capacity() const {
  std::lock_guard lock(mutex_);
  return capacity_;
}

std::size_t ProductCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

ProductCache& default_cache() {
  static ProductCache cache;
  return cache;
}

namespace {

template <class Coeff, class Scalar>
HyperElement<Coeff> mul_h1_impl(const HyperElement<Coeff>& a, const Scalar& r) {
  HyperElement<Coeff> out;
  const Coeff rc(r);
  const Coeff sc(1 - r);
  for (const auto& [n, c] : a.terms()) {
    if (n == 0) {
      out.add(1, c);
    } else {
      out.add(n - 1, Coeff(rc * c));
      out.add(n + 1, Coeff(sc * c));
    }
  }
  return out;
}

// One induction step: given h_{k-1} h_n and h_{k-2} h_n, form h_k h_n.
template <class Coeff, class Scalar>
HyperElement<Coeff> next_row(const HyperElement<Coeff>& prev1, const HyperElement<Coeff>& prev2, const Scalar& r) {
  auto row = mul_h1_impl(prev1, r);
  HyperElement<Coeff> back = prev2;
  back *= Coeff(r);
  row -= back;
  row *= Coeff(Coeff(1) / Coeff(1 - r));
  return row;
}

void check_degrees(Degree m, Degree n) {
  ExactElement::check_degree(m);
  ExactElement::check_degree(n);
}

ComplexElement mul_basis_float(Degree m, Degree n, double r) {
  auto prev2 = ComplexElement::basis(n);
  if (m == 0) return prev2;
  auto prev1 = mul_h1_impl(prev2, r);
  for (Degree k = 2; k <= m; ++k) {
    auto row = next_row(prev1, prev2, r);
    prev2 = std::move(prev1);
    prev1 = std::move(row);
  }
  return prev1;
}

}  // namespace

ExactElement mul_h1(const ExactElement& a, const Rational& r) { return mul_h1_impl(a, r); }
ComplexElement mul_h1(const ComplexElement& a, double r) { return mul_h1_impl(a, r); }

ExactElement mul_basis_recursive(Degree m, Degree n, const Param& param, ProductCache* cache) {
  check_degrees(m, n);
  const Rational& r = param.exact();

  ExactElement result;
  if (cache && cache->lookup(m, n, r, result)) return result;

  auto prev2 = ExactElement::basis(n);
  if (m == 0) return prev2;
  auto prev1 = mul_h1(prev2, r);
  for (Degree k = 2; k <= m; ++k) {
    ExactElement row;
    if (!(cache && cache->lookup(k, n, r, row))) {
      row = next_row(prev1, prev2, r);
      if (cache) cache->store(k, n, r, row);
    }
    prev2 = std::move(prev1);
    prev1 = std::move(row);
  }
  if (cache && m == 1) cache->store(m, n, r, prev1);
  return prev1;
}

ExactElement mul_basis_closed(Degree m, Degree n, const Param& param) {
  check_degrees(m, n);
  if (m < 1) throw DomainError("closed-form product needs m >= 1");
  if (m > n) throw DomainError("closed-form product needs m <= n; order the factors by commutativity");
  const Rational& r = param.exact();
  if (r == 0) throw DomainError("closed-form product is undefined at r = 0; use the recursion");

  const Rational s = 1 - r;
  const Rational t = 1 - 2 * r;
  const Rational scale = 1 / pow(s, static_cast<unsigned>(m - 1));
  const auto um = static_cast<unsigned>(m);

  ExactElement out;
  out.add(n - m, Rational(pow(r, um) * scale));
  for (unsigned k = 1; k + 1 <= um; ++k)
    out.add(n - m + 2 * static_cast<Degree>(k), Rational(pow(r, um - k) * pow(s, k - 1) * t * scale));
  out.add(n + m, s);
  return out;
}

ExactElement mul(const ExactElement& a, const ExactElement& b, const Param& r) {
  ExactElement out;
  for (const auto& [m, x] : a.terms()) {
    for (const auto& [n, y] : b.terms()) {
      auto prod = mul_basis_recursive(m, n, r);
      prod *= Rational(x * y);
      out += prod;
    }
  }
  return out;
}

ComplexElement mul(const ComplexElement& a, const ComplexElement& b, const Param& r) {
  ComplexElement out;
  for (const auto& [m, x] : a.terms()) {
    for (const auto& [n, y] : b.terms()) {
      auto prod = r.is_exact() ? to_complex(mul_basis_recursive(m, n, r)) : mul_basis_float(m, n, r.value());
      prod *= x * y;
      out += prod;
    }
  }
  return out;
}

Rational norm_l1(const ExactElement& a) {
  Rational sum(0);
  for (const auto& [n, c] : a.terms()) sum += abs(c);
  return sum;
}

double norm_l1(const ComplexElement& a) {
  double sum = 0.0;
  for (const auto& [n, c] : a.terms()) sum += std::abs(c);
  return sum;
}

ExactElement involution(const ExactElement& a) { return a; }

ComplexElement involution(const ComplexElement& a) {
  ComplexElement out;
  for (const auto& [n, c] : a.terms()) out.add(n, std::conj(c));
  return out;
}

ComplexElement to_complex(const ExactElement& a) {
  ComplexElement out;
  for (const auto& [n, c] : a.terms()) out.add(n, {c.get_d(), 0.0});
  return out;
}

}  // namespace hypergroup::algebra
