#pragma once

#include <complex>
#include <cstddef>
#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <type_traits>

#include "hypergroup/error.hpp"
#include "hypergroup/param.hpp"
#include "hypergroup/rational.hpp"

namespace hypergroup::algebra {

using Degree = long;

/// Finitely supported element sum_n a_n h_n of the hypergroup algebra.
/// Zero coefficients are never stored.
template <class Coeff>
class HyperElement {
 public:
  using coefficient_type = Coeff;
  using container = std::map<Degree, Coeff>;

  HyperElement() = default;

  static HyperElement basis(Degree n, Coeff c = Coeff(1)) {
    HyperElement e;
    e.add(n, c);
    return e;
  }

  /// a_n += c. Negative degrees are rejected.
  void add(Degree n, const Coeff& c) {
    check_degree(n);
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff(0)) terms_.erase(it);
    }
  }

  Coeff coeff(Degree n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  const container& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Degree max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  HyperElement& operator+=(const HyperElement& other) {
    for (const auto& [n, c] : other.terms_) add(n, c);
    return *this;
  }
  HyperElement& operator-=(const HyperElement& other) {
    for (const auto& [n, c] : other.terms_) add(n, Coeff(-c));
    return *this;
  }
  HyperElement& operator*=(const Coeff& s) {
    if (s == Coeff(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [n, c] : terms_) c *= s;
    return *this;
  }
  friend HyperElement operator+(HyperElement a, const HyperElement& b) { return a += b; }
  friend HyperElement operator-(HyperElement a, const HyperElement& b) { return a -= b; }
  friend HyperElement operator*(const Coeff& s, HyperElement a) { return a *= s; }

  friend bool operator==(const HyperElement& a, const HyperElement& b) { return a.terms_ == b.terms_; }

  static void check_degree(Degree n) {
    if (n < 0) throw DomainError("negative degree " + std::to_string(n));
  }

 private:
  container terms_;
};

using ExactElement = HyperElement<Rational>;
using ComplexElement = HyperElement<std::complex<double>>;

/// Bounded, thread-safe memo of exact basis products keyed by (m, n, r).
/// Once full, the oldest entries are evicted first.
class ProductCache {
 public:
  explicit ProductCache(std::size_t capacity = 1 << 16) : capacity_(capacity) {}

  bool lookup(Degree m, Degree n, const Rational& r, ExactElement& out) const;
  void store(Degree m, Degree n, const Rational& r, const ExactElement& value);
  void clear();
  void set_capacity(std::size_t capacity);
  std::size_t capacity() const;
  std::size_t size() const;

 private:
  using Key = std::tuple<Degree, Degree, std::string>;
  mutable std::mutex mutex_;
  std::size_t capacity_;
  std::map<Key, ExactElement> entries_;
  std::deque<Key> order_;
};

/// Process-wide cache used when callers do not pass their own.
ProductCache& default_cache();

/// h_1 * a, straight from the three-term relation.
ExactElement mul_h1(const ExactElement& a, const Rational& r);
ComplexElement mul_h1(const ComplexElement& a, double r);

/// h_m h_n by induction on m: h_m = (h_1 h_{m-1} - r h_{m-2}) / (1 - r).
/// Requires an exact parameter. Pass cache = nullptr to bypass memoization.
ExactElement mul_basis_recursive(Degree m, Degree n, const Param& r, ProductCache* cache = &default_cache());

/// h_m h_n from the explicit product expansion. Needs 1 <= m <= n and r not in {0, 1}.
ExactElement mul_basis_closed(Degree m, Degree n, const Param& r);

/// Bilinear product of exact elements (exact parameter required).
ExactElement mul(const ExactElement& a, const ExactElement& b, const Param& r);
/// Bilinear product in floating point; accepts float parameters.
ComplexElement mul(const ComplexElement& a, const ComplexElement& b, const Param& r);

/// sum_n |a_n|, exact.
Rational norm_l1(const ExactElement& a);
double norm_l1(const ComplexElement& a);

/// h_n^* = h_n, so the involution conjugates coefficients.
ExactElement involution(const ExactElement& a);
ComplexElement involution(const ComplexElement& a);

ComplexElement to_complex(const ExactElement& a);

}  // namespace hypergroup::algebra
