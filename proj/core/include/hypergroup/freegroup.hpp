#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hypergroup/algebra.hpp"

namespace hypergroup::freegroup {

using algebra::Degree;

/// Reduced word in the free group on l generators. Letter +k is g_k and -k is
/// its inverse (1 <= k <= l); no letter is ever next to its own inverse.
class Word {
 public:
  using Letter = std::int8_t;

  Word() = default;
  /// Reduces the given letters.
  explicit Word(std::vector<Letter> letters);

  static Word generator(int k, bool inverse = false);

  std::size_t length() const noexcept { return letters_.size(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  Word inverse() const;
  /// Concatenation followed by free reduction.
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

/// Size bounds for enumeration and for the Gram matrices.
struct Limits {
  std::size_t max_words = 20000;      ///< admits spheres up to n = 8 for l = 2
  std::size_t max_dimension = 3000;   ///< ball size cap for Gram matrices
};

/// |G_n| = 2l (2l - 1)^{n - 1} for n >= 1, and 1 for n = 0. Needs l >= 2.
std::uint64_t sphere_size(int l, Degree n);

/// All reduced words of length exactly n, in a fixed deterministic order.
/// Throws ResourceError if the sphere is larger than limits.max_words.
std::vector<Word> enumerate_sphere(int l, Degree n, const Limits& limits = {});

/// All reduced words of length at most radius, shortest first.
std::vector<Word> enumerate_ball(int l, Degree radius, const Limits& limits = {});

/// #{g in G_m : |g^{-1} w| = n} for a fixed w. By homogeneity of the free
/// group this depends on w only through |w|.
std::uint64_t factorization_count(int l, Degree m, Degree n, const Word& w, const Limits& limits = {});

/// Structure constants of h_m h_n (h_k = normalized indicator of G_k) in the
/// radial algebra of F_l, counted on the representative w = g_1^k.
algebra::ExactElement radial_convolve(Degree m, Degree n, int l, const Limits& limits = {});

struct GramReport {
  double lambda = 0.0;
  int l = 0;
  Degree radius = 0;
  std::size_t dimension = 0;
  double min_eigenvalue = 0.0;
  double residual = 0.0;  ///< ||A v - mu v|| / ||v|| for the returned eigenpair
  bool psd = false;       ///< min_eigenvalue >= -1e-10 * dimension
};

/// Gram matrix [lambda^{-|g^{-1} h|}] over the ball of the given radius, and
/// its smallest eigenvalue. Negative lambda is used as a plain real base.
GramReport haagerup_gram(double lambda, int l, Degree radius, const Limits& limits = {});

/// min_eigenvalue for lambda and -lambda agree within 1e-9 * dimension
/// (the sign twist g -> (-1)^{|g|} g conjugates one Gram matrix into the other).
bool sign_twist_check(double lambda, int l, Degree radius, const Limits& limits = {});

}  // namespace hypergroup::freegroup
