#include "hypergroup/freegroup.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "hypergroup/error.hpp"

namespace hypergroup::freegroup {

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (x == 0) throw DomainError("letter 0 is not a generator");
    if (!letters_.empty() && letters_.back() == -x)
      letters_.pop_back();
    else
      letters_.push_back(x);
  }
}

Word Word::generator(int k, bool inverse) {
  if (k < 1 || k > std::numeric_limits<Letter>::max()) throw DomainError("generator index out of range");
  Word w;
  w.letters_.push_back(static_cast<Letter>(inverse ? -k : k));
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  for (auto& x : w.letters_) x = static_cast<Letter>(-x);
  return w;
}

Word operator*(const Word& a, const Word& b) {
  // Cancel the overlap between the tail of a and the head of b.
  std::size_t cancel = 0;
  const std::size_t la = a.letters_.size();
  while (cancel < la && cancel < b.letters_.size() && a.letters_[la - 1 - cancel] == -b.letters_[cancel]) ++cancel;
  Word w;
  w.letters_.reserve(la + b.letters_.size() - 2 * cancel);
  w.letters_.insert(w.letters_.end(), a.letters_.begin(), a.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  w.letters_.insert(w.letters_.end(), b.letters_.begin() + static_cast<std::ptrdiff_t>(cancel), b.letters_.end());
  return w;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "e";
  std::string s;
  for (Letter x : letters_) {
    if (!s.empty()) s += ' ';
    s += 'g' + std::to_string(std::abs(x));
    if (x < 0) s += "^-1";
  }
  return s;
}

namespace {

void check_rank(int l) {
  if (l < 2) throw DomainError("free group rank l must be at least 2");
  if (l > std::numeric_limits<Word::Letter>::max()) throw DomainError("free group rank too large");
}

std::vector<Word::Letter> alphabet(int l) {
  std::vector<Word::Letter> out;
  for (int k = 1; k <= l; ++k) {
    out.push_back(static_cast<Word::Letter>(k));
    out.push_back(static_cast<Word::Letter>(-k));
  }
  return out;
}

void extend(const std::vector<Word::Letter>& alpha, std::vector<Word::Letter>& prefix, std::size_t n,
            std::vector<Word>& out) {
  if (prefix.size() == n) {
    out.emplace_back(prefix);
    return;
  }
  for (auto x : alpha) {
    if (!prefix.empty() && prefix.back() == -x) continue;
    prefix.push_back(x);
    extend(alpha, prefix, n, out);
    prefix.pop_back();
  }
}

Rational to_rational(std::uint64_t x) { return Rational(mpz_class(static_cast<unsigned long>(x))); }

double ipow(double base, std::size_t n) {
  double result = 1.0;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace

std::uint64_t sphere_size(int l, Degree n) {
  check_rank(l);
  algebra::ExactElement::check_degree(n);
  if (n == 0) return 1;
  const std::uint64_t branch = 2 * static_cast<std::uint64_t>(l) - 1;
  std::uint64_t size = 2 * static_cast<std::uint64_t>(l);
  for (Degree k = 1; k < n; ++k) {
    if (size > std::numeric_limits<std::uint64_t>::max() / branch) throw ResourceError("sphere size overflows 64 bits");
    size *= branch;
  }
  return size;
}

std::vector<Word> enumerate_sphere(int l, Degree n, const Limits& limits) {
  const auto size = sphere_size(l, n);
  if (size > limits.max_words)
    throw ResourceError("sphere of radius " + std::to_string(n) + " in F_" + std::to_string(l) + " has " +
                        std::to_string(size) + " words, above the limit " + std::to_string(limits.max_words));
  std::vector<Word> out;
  out.reserve(size);
  std::vector<Word::Letter> prefix;
  extend(alphabet(l), prefix, static_cast<std::size_t>(n), out);
  return out;
}

std::vector<Word> enumerate_ball(int l, Degree radius, const Limits& limits) {
  std::uint64_t total = 0;
  for (Degree n = 0; n <= radius; ++n) total += sphere_size(l, n);
  if (total > limits.max_dimension)
    throw ResourceError("ball of radius " + std::to_string(radius) + " in F_" + std::to_string(l) + " has " +
                        std::to_string(total) + " words, above the limit " + std::to_string(limits.max_dimension));
  std::vector<Word> out;
  out.reserve(total);
  for (Degree n = 0; n <= radius; ++n) {
    auto sphere = enumerate_sphere(l, n, Limits{std::max<std::size_t>(limits.max_words, total), limits.max_dimension});
    out.insert(out.end(), sphere.begin(), sphere.end());
  }
  return out;
}

std::uint64_t factorization_count(int l, Degree m, Degree n, const Word& w, const Limits& limits) {
  algebra::ExactElement::check_degree(n);
  std::uint64_t count = 0;
  for (const auto& g : enumerate_sphere(l, m, limits))
    if (static_cast<Degree>((g.inverse() * w).length()) == n) ++count;
  return count;
}

algebra::ExactElement radial_convolve(Degree m, Degree n, int l, const Limits& limits) {
  check_rank(l);
  algebra::ExactElement::check_degree(m);
  algebra::ExactElement::check_degree(n);
  const auto gm = enumerate_sphere(l, m, limits);
  const Rational norm = to_rational(sphere_size(l, m)) * to_rational(sphere_size(l, n));

  algebra::ExactElement out;
  for (Degree k = std::abs(m - n); k <= m + n; ++k) {
    const Word w(std::vector<Word::Letter>(static_cast<std::size_t>(k), Word::Letter{1}));
    std::uint64_t count = 0;
    for (const auto& g : gm)
      if (static_cast<Degree>((g.inverse() * w).length()) == n) ++count;
    if (count == 0) continue;
    out.add(k, Rational(to_rational(count) * to_rational(sphere_size(l, k)) / norm));
  }
  return out;
}

GramReport haagerup_gram(double lambda, int l, Degree radius, const Limits& limits) {
  if (lambda == 0.0 || !std::isfinite(lambda)) throw DomainError("Haagerup function needs a finite lambda != 0");
  const auto ball = enumerate_ball(l, radius, limits);
  const auto dim = static_cast<Eigen::Index>(ball.size());

  std::vector<Word> inverses;
  inverses.reserve(ball.size());
  for (const auto& g : ball) inverses.push_back(g.inverse());

  const double base = 1.0 / lambda;
  Eigen::MatrixXd gram(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i; j < dim; ++j) {
      const auto d = (inverses[static_cast<std::size_t>(i)] * ball[static_cast<std::size_t>(j)]).length();
      gram(i, j) = gram(j, i) = ipow(base, d);
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success) throw VerificationError("Gram eigenvalue computation failed");

  GramReport rep;
  rep.lambda = lambda;
  rep.l = l;
  rep.radius = radius;
  rep.dimension = ball.size();
  rep.min_eigenvalue = solver.eigenvalues()(0);
  const Eigen::VectorXd v = solver.eigenvectors().col(0);
  rep.residual = (gram * v - rep.min_eigenvalue * v).norm() / v.norm();
  rep.psd = rep.min_eigenvalue >= -1e-10 * static_cast<double>(rep.dimension);
  return rep;
}

bool sign_twist_check(double lambda, int l, Degree radius, const Limits& limits) {
  const auto plus = haagerup_gram(lambda, l, radius, limits);
  const auto minus = haagerup_gram(-lambda, l, radius, limits);
  return std::abs(plus.min_eigenvalue - minus.min_eigenvalue) <= 1e-9 * static_cast<double>(plus.dimension);
}

}  // namespace hypergroup::freegroup
