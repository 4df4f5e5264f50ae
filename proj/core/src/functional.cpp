#include "hypergroup/functional.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "hypergroup/error.hpp"
#include "hypergroup/orthopoly.hpp"

namespace hypergroup::spectra {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s) { return to_double(parse_rational(s)); }

// "sqrt(q)" / "-sqrt(q)" / "+sqrt(q)" or a plain rational.
Lambda parse_real(std::string_view s) {
  s = strip(s);
  int sign = 1;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    sign = body.front() == '-' ? -1 : 1;
    body.remove_prefix(1);
  }
  if (body.substr(0, 5) == "sqrt(" && body.back() == ')') {
    auto q = parse_rational(body.substr(5, body.size() - 6));
    return Lambda::sqrt_of(q, sign);
  }
  return Lambda::rational(parse_rational(s));
}

// "a+bi", "-2i", "i": exact real and imaginary parts.
std::pair<Rational, Rational> parse_complex(std::string_view s) {
  // Split at the last sign that is not a leading sign or an exponent sign.
  auto body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [](std::string_view t) {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return parse_rational(t);
  };
  if (split == std::string_view::npos) return {Rational(0), imag_of(body)};
  return {parse_rational(body.substr(0, split)), imag_of(body.substr(split))};
}

}  // namespace

Lambda Lambda::from(cplx v) {
  if (v == cplx(0.0)) throw DomainError("lambda must be nonzero");
  Lambda l;
  l.value = v;
  return l;
}

Lambda Lambda::rational(const Rational& q) {
  if (q == 0) throw DomainError("lambda must be nonzero");
  Lambda l;
  l.value = {q.get_d(), 0.0};
  l.exact = q;
  l.modulus_sq = Rational(q * q);
  return l;
}

Lambda Lambda::sqrt_of(const Rational& q, int sign) {
  if (q <= 0) throw DomainError("sqrt(q) needs q > 0");
  Lambda l;
  l.value = {sign * std::sqrt(q.get_d()), 0.0};
  l.modulus_sq = q;
  // Perfect squares collapse to an exact rational.
  if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    Rational root(num, den);
    root.canonicalize();
    l.exact = sign < 0 ? Rational(-root) : root;
  }
  return l;
}

Lambda Lambda::parse(std::string_view text) {
  auto s = strip(text);
  if (s.empty()) throw DomainError("empty lambda");
  if (auto at = s.find('@'); at != std::string_view::npos) {
    Lambda mod = parse_real(s.substr(0, at));
    if (mod.value.real() <= 0.0) throw DomainError("polar modulus must be positive in '" + std::string(text) + "'");
    const double deg = parse_double(strip(s.substr(at + 1)));
    Lambda l;
    const double turn = std::fmod(deg, 360.0);
    if (turn == 0.0 || std::abs(turn) == 180.0) {
      int sign = turn == 0.0 ? 1 : -1;
      l = mod;
      l.value *= sign;
      if (l.exact) l.exact = Rational(sign * *l.exact);
      return l;
    }
    const double rad = deg * std::numbers::pi / 180.0;
    l.value = std::polar(mod.value.real(), rad);
    l.modulus_sq = mod.modulus_sq;
    return l;
  }
  if (s.find("sqrt(") != std::string_view::npos) return parse_real(s);
  if (s.back() == 'i') {
    const auto [re, im] = parse_complex(s);
    if (im == 0) return Lambda::rational(re);
    Lambda l = Lambda::from({to_double(re), to_double(im)});
    l.modulus_sq = Rational(re * re + im * im);
    return l;
  }
  return Lambda::rational(parse_rational(s));
}

std::string Lambda::to_string() const {
  if (exact) return hypergroup::to_string(*exact);
  char buf[80];
  if (value.imag() == 0.0)
    std::snprintf(buf, sizeof buf, "%.17g", value.real());
  else
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", value.real(), value.imag());
  return buf;
}

FunctionalSpec FunctionalSpec::geometric(cplx lambda) {
  if (lambda == cplx(0.0)) throw DomainError("geometric functional needs lambda != 0");
  return FunctionalSpec(Geometric{lambda});
}

FunctionalSpec FunctionalSpec::point_eval(cplx c) { return FunctionalSpec(PointEval{c}); }

FunctionalSpec FunctionalSpec::delta_at_0() { return FunctionalSpec(DeltaAt0{}); }

FunctionalSpec FunctionalSpec::finite(std::vector<cplx> values) { return FunctionalSpec(FiniteSeq{std::move(values)}); }

std::string FunctionalSpec::family() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Geometric>) return "geometric";
        if constexpr (std::is_same_v<T, PointEval>) return "point";
        if constexpr (std::is_same_v<T, DeltaAt0>) return "plancherel";
        if constexpr (std::is_same_v<T, FiniteSeq>) return "finite";
      },
      v_);
}

cplx FunctionalSpec::phi_n(Degree n, const Param& r) const {
  algebra::ExactElement::check_degree(n);
  return std::visit(
      [&](const auto& v) -> cplx {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Geometric>) {
          cplx base = 1.0 / v.lambda;
          cplx result(1.0);
          for (Degree k = n; k > 0; k >>= 1) {
            if (k & 1) result *= base;
            base *= base;
          }
          return result;
        } else if constexpr (std::is_same_v<T, PointEval>) {
          return orthopoly::eval_P(n, v.c, r);
        } else if constexpr (std::is_same_v<T, DeltaAt0>) {
          return n == 0 ? cplx(1.0) : cplx(0.0);
        } else {
          return static_cast<std::size_t>(n) < v.values.size() ? v.values[static_cast<std::size_t>(n)] : cplx(0.0);
        }
      },
      v_);
}

cplx FunctionalSpec::phi(cplx z, const Param& r) const {
  return std::visit(
      [&](const auto& v) -> cplx {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Geometric>) {
          const cplx den = 1.0 - z / v.lambda;
          if (std::abs(den) <= 1e-15)
            throw SingularityError("geometric series pole at z = lambda (|z| = " + std::to_string(std::abs(z)) +
                                       ", radius " + std::to_string(std::abs(v.lambda)) + ")",
                                   z, v.lambda);
          return 1.0 / den;
        } else if constexpr (std::is_same_v<T, PointEval>) {
          return orthopoly::gen_fun(z, v.c, r);
        } else if constexpr (std::is_same_v<T, DeltaAt0>) {
          return cplx(1.0);
        } else {
          cplx acc(0.0);
          for (auto it = v.values.rbegin(); it != v.values.rend(); ++it) acc = acc * z + *it;
          return acc;
        }
      },
      v_);
}

double FunctionalSpec::radius(const Param& r) const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Geometric>) {
          return std::abs(v.lambda);
        } else if constexpr (std::is_same_v<T, PointEval>) {
          // Poles solve r z^2 - c z + (1 - r) = 0.
          const double rv = r.value();
          if (rv == 0.0) return v.c == cplx(0.0) ? inf : std::abs(1.0 / v.c);
          const cplx root = std::sqrt(v.c * v.c - 4.0 * rv * (1.0 - rv));
          return std::min(std::abs((v.c + root) / (2.0 * rv)), std::abs((v.c - root) / (2.0 * rv)));
        } else {
          return inf;
        }
      },
      v_);
}

std::vector<double> FunctionalSpec::atom_candidates(const Param& r) const {
  std::vector<double> out;
  auto consider = [&](cplx c) {
    const double scale = std::max(1.0, std::abs(c));
    if (std::abs(c.imag()) <= 1e-12 * scale && std::abs(c.real()) <= 1.0 + 1e-12)
      out.push_back(std::clamp(c.real(), -1.0, 1.0));
  };
  if (auto g = std::get_if<Geometric>(&v_)) consider(c_r(g->lambda, r));
  if (auto p = std::get_if<PointEval>(&v_)) consider(p->c);
  for (double edge : {-1.0, 1.0})
    if (std::none_of(out.begin(), out.end(), [&](double t) { return std::abs(t - edge) <= 1e-12; }))
      out.push_back(edge);
  std::sort(out.begin(), out.end());
  return out;
}

cplx c_r(cplx lambda, const Param& r) {
  if (lambda == cplx(0.0)) throw DomainError("c_r needs lambda != 0");
  const double rv = r.value();
  return rv * lambda + (1.0 - rv) / lambda;
}

Rational c_r(const Rational& lambda, const Param& param) {
  if (lambda == 0) throw DomainError("c_r needs lambda != 0");
  const Rational& r = param.exact();
  return Rational(r * lambda + (1 - r) / lambda);
}

}  // namespace hypergroup::spectra
