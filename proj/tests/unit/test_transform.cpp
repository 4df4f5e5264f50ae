#include <doctest.h>

#include <cmath>
#include <numbers>
#include <thread>

#include "../support/oracles.hpp"
#include "hypergroup/error.hpp"
#include "hypergroup/transform.hpp"

using namespace hypergroup;
using namespace hypergroup::transform;
using spectra::FunctionalSpec;

namespace {

const Param quarter(Rational(1, 4));
constexpr double kPi = std::numbers::pi;

double plancherel_density(double t, double r) {
  const double a2 = 4 * r * (1 - r);
  return std::sqrt(a2 - t * t) / (2 * kPi * r * (1 - t * t));
}

cplx geometric_density(double t, cplx lambda, double r) {
  const double a2 = 4 * r * (1 - r);
  const cplx c = r * lambda + (1 - r) / lambda;
  return (lambda - 1.0 / lambda) / (2 * kPi) * std::sqrt(a2 - t * t) / ((1 - t * t) * (c - t));
}

// Kernel as first written, before rationalizing.
cplx kernel_unrationalized(cplx w, double r) {
  const cplx s = std::sqrt(w - 2 * std::sqrt(r * (1 - r))) * std::sqrt(w + 2 * std::sqrt(r * (1 - r)));
  return ((2 * r - 1) * w + s) / (2 * r * (1 - r) * (1.0 - w * w));
}

// 400 points spread over the plane, avoiding the real axis.
std::vector<cplx> plane_sample(std::size_t count, double spread) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<cplx> out;
  while (out.size() < count) {
    const cplx w(u(oracle::rng()), u(oracle::rng()));
    if (std::abs(w.imag()) > 1e-3) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("branch of the square root: worked values") {
  CHECK(sqrt_branch(2.0, quarter).real() == doctest::Approx(std::sqrt(13.0) / 2).epsilon(1e-15));
  CHECK(std::abs(sqrt_branch(0.0, quarter, CutSide::above) - cplx(0.0, std::sqrt(3.0) / 2)) < 1e-15);
  CHECK(std::abs(sqrt_branch(0.0, quarter, CutSide::below) - cplx(0.0, -std::sqrt(3.0) / 2)) < 1e-15);
  CHECK(sqrt_branch(1000.0, quarter).real() == doctest::Approx(999.999625).epsilon(1e-12));
  CHECK(sqrt_branch(-2.0, quarter).real() == doctest::Approx(-std::sqrt(13.0) / 2).epsilon(1e-15));
  CHECK_THROWS_AS(sqrt_branch(0.3, quarter), DomainError);
  CHECK_THROWS_AS(sqrt_branch(0.3, Param(Rational(3, 4))), DomainError);
}

TEST_CASE("branch consistency, Schwarz symmetry and behaviour at infinity") {
  for (double r : {0.1, 0.25, 0.5}) {
    const Param p(r);
    const double a2 = 4 * r * (1 - r);
    for (cplx w : plane_sample(400, 3.0)) {
      const cplx s = sqrt_branch(w, p);
      CHECK(std::abs(s * s - (w * w - a2)) <= 1e-12 * std::max(1.0, std::abs(w * w - a2)));
      CHECK(std::abs(sqrt_branch(std::conj(w), p) - std::conj(s)) <= 1e-14 * std::max(1.0, std::abs(s)));
    }
    for (cplx w : {cplx(1e4, 0.0), cplx(0.0, 1e4), cplx(-1e4, 1e4), cplx(-3e3, -2e3)})
      CHECK(std::abs(sqrt_branch(w, p) / w - 1.0) < 1e-6);
  }
}

TEST_CASE("cut sides are the boundary values") {
  for (double r : {0.1, 0.25, 0.5}) {
    const Param p(r);
    const double a = 2 * std::sqrt(r * (1 - r));
    for (double t : {-0.9 * a, -0.2 * a, 0.0, 0.7 * a}) {
      CHECK(std::abs(sqrt_branch({t, 1e-10}, p) - sqrt_branch(t, p, CutSide::above)) < 1e-5);
      CHECK(std::abs(sqrt_branch({t, -1e-10}, p) - sqrt_branch(t, p, CutSide::below)) < 1e-5);
      CHECK(std::abs(sqrt_branch(t, p, CutSide::above) - cplx(0.0, std::sqrt(a * a - t * t))) < 1e-14);
    }
    for (double t : {a + 0.01, 1.5, -a - 0.3})
      for (auto side : {CutSide::above, CutSide::below, CutSide::off_cut})
        CHECK(std::abs(sqrt_branch(t, p, side) - std::copysign(std::sqrt(t * t - a * a), t)) < 1e-14);
  }
}

TEST_CASE("variable change") {
  CHECK(w_of_z(1.0, quarter) == cplx(1.0));
  CHECK(w_of_z(2.0, quarter).real() == doctest::Approx(7.0 / 8.0).epsilon(1e-15));
  CHECK_THROWS_AS(w_of_z(0.0, quarter), DomainError);
  // The circle |z| = sqrt((1 - r)/r) lands on the cut.
  for (int k = 0; k < 64; ++k) {
    const cplx z = std::polar(std::sqrt(3.0), 2 * kPi * k / 64.0);
    const cplx w = w_of_z(z, quarter);
    CHECK(std::abs(w.imag()) <= 1e-12);
    CHECK(std::abs(w.real()) <= std::sqrt(3.0) / 2 + 1e-12);
  }
  const cplx big(1e6, 3e5);
  CHECK(std::abs(z_of_w(big, quarter, Branch::inner) * big / 0.75 - 1.0) < 1e-6);
  const cplx zi = z_of_w(0.875, quarter, Branch::inner);
  CHECK(std::abs(zi) < std::sqrt(3.0));
  CHECK(std::abs(w_of_z(zi, quarter) - 0.875) <= 1e-14);
  CHECK(std::abs(z_of_w(0.875, quarter, Branch::outer) - 2.0) <= 1e-14);
  CHECK_THROWS_AS(z_of_w(0.2, quarter, Branch::inner), DomainError);
  CHECK_THROWS_AS(z_of_w(2.0, Param(Rational(0)), Branch::inner), DomainError);
}

TEST_CASE("round trips through both branches") {
  for (double r : {0.1, 0.25, 0.5}) {
    const Param p(r);
    const double crit = std::sqrt((1 - r) / r);
    for (cplx w : plane_sample(400, 4.0)) {
      const cplx zi = z_of_w(w, p, Branch::inner), zo = z_of_w(w, p, Branch::outer);
      CHECK(std::abs(w_of_z(zi, p) - w) <= 1e-12 * std::max(1.0, std::abs(w)));
      CHECK(std::abs(w_of_z(zo, p) - w) <= 1e-12 * std::max(1.0, std::abs(w)));
      CHECK(std::abs(zi) < crit);
      CHECK(std::abs(zo) > crit);
    }
    std::uniform_real_distribution<double> rad(0.01, 0.999), ang(-kPi, kPi);
    for (int k = 0; k < 400; ++k) {
      const cplx z = std::polar(rad(oracle::rng()) * crit, ang(oracle::rng()));
      if (std::abs(z.imag()) < 1e-6) continue;
      CHECK(std::abs(z_of_w(w_of_z(z, p), p, Branch::inner) - z) <= 1e-12 * std::max(1.0, std::abs(z)));
    }
  }
}

TEST_CASE("slit disc") {
  CHECK(in_region_Dr(0.5, quarter));
  CHECK_FALSE(in_region_Dr(1.2, quarter));
  CHECK(in_region_Dr(cplx(0.0, 1.2), quarter));
  CHECK_FALSE(in_region_Dr(-1.5, quarter));
  CHECK_FALSE(in_region_Dr(cplx(1.0, 1.5), quarter));
  for (double r : {0.1, 0.25, 0.5}) {
    const Param p(r);
    for (cplx w : plane_sample(400, 5.0)) CHECK(in_region_Dr(z_of_w(w, p, Branch::inner), p));
    for (double t : {1.01, 1.5, 30.0, -1.01, -7.0}) CHECK(in_region_Dr(z_of_w(t, p, Branch::inner), p));
  }
}

TEST_CASE("rationalized kernel equals the original form") {
  for (double r : {0.1, 0.25, 0.5}) {
    const Param p(r);
    for (cplx w : plane_sample(200, 3.0)) {
      if (std::abs(w - 1.0) < 0.05 || std::abs(w + 1.0) < 0.05) continue;
      const cplx ref = kernel_unrationalized(w, r);
      CHECK(std::abs(cauchy_kernel(w, p) - ref) <= 1e-11 * std::max(1.0, std::abs(ref)));
    }
    // Finite and continuous through w = +-1 while the cut stays inside (-1, 1).
    if (r == 0.5) continue;
    for (double sgn : {1.0, -1.0})
      CHECK(std::abs(cauchy_kernel(sgn * cplx(1.0, 1e-9), p) - cauchy_kernel(sgn * cplx(1.0 + 1e-7, 0.0), p)) < 1e-6);
  }
}

TEST_CASE("Cauchy transform: closed forms") {
  const auto delta = FunctionalSpec::delta_at_0();
  // (-(1 - 2r) w + s) / (2 r (1 - w^2)) at w = 2, r = 1/4.
  CHECK(cauchy_C(2.0, delta, quarter).real() == doctest::Approx(-0.535184).epsilon(1e-6));
  const cplx lam(1.5, 0.0);
  for (cplx w : {cplx(2.0, 0.0), cplx(0.3, 0.7), cplx(-1.2, -0.4)}) {
    const cplx c = 0.25 * lam + 0.75 / lam;
    const cplx s = sqrt_branch(w, quarter);
    const cplx ref = 1.0 / (c - w) + (lam - 1.0 / lam) / 2.0 * (-0.5 * w + s) / ((1.0 - w * w) * (c - w));
    CHECK(std::abs(cauchy_C(w, FunctionalSpec::geometric(lam), quarter) - ref) < 1e-12);
  }
  CHECK_THROWS_AS(cauchy_C(0.5, delta, quarter), DomainError);
  CHECK_THROWS_AS(cauchy_C(-1.0, delta, quarter), DomainError);
}

TEST_CASE("Cauchy transform of the Plancherel measure by direct integration") {
  for (double r : {0.1, 0.25, 0.5}) {
    const Param p(r);
    const double a = 2 * std::sqrt(r * (1 - r));
    for (cplx w : {cplx(0.3, 0.5), cplx(2.0, 0.0), cplx(0.0, -1.5), cplx(-1.3, 0.1)}) {
      // t = a cos(theta): the density times the Jacobian is a^2 sin^2 / (2 pi r (1 - t^2)).
      auto integrand = [&](double th) {
        const double t = a * std::cos(th), sn = a * std::sin(th);
        const double den = (1 - 2 * r) * (1 - 2 * r) + sn * sn;  // 1 - t^2
        const double ratio = den == 0.0 ? 1.0 : sn * sn / den;   // r = 1/2 endpoint limit
        return cplx(ratio / (2 * kPi * r)) / (t - w);
      };
      const cplx ref = oracle::simpson(integrand, 0.0, kPi, 20000);
      CHECK(std::abs(cauchy_C(w, FunctionalSpec::delta_at_0(), p) - ref) < 1e-8);
    }
  }
}

TEST_CASE("large-w expansion for every family") {
  const double R = 1e3;
  for (double r : {0.0, 0.25, 0.5}) {
    const Param p(r);
    for (const auto& phi : {FunctionalSpec::delta_at_0(), FunctionalSpec::geometric(2.0),
                            FunctionalSpec::geometric(cplx(1.0, 1.5)), FunctionalSpec::point_eval(0.3),
                            FunctionalSpec::finite({1.0, 0.5, cplx(0.0, 0.25)})}) {
      for (cplx w : {cplx(R, 0.0), cplx(0.0, R), std::polar(R, 2.5)}) {
        const cplx expect = -phi.phi_n(0, p) / w - phi.phi_n(1, p) / (w * w);
        CHECK(std::abs(cauchy_C(w, phi, p) - expect) <= 1e-6 * std::abs(expect));
      }
    }
  }
}

TEST_CASE("r = 0 path") {
  const Param zero(Rational(0));
  const auto phi = FunctionalSpec::geometric(2.0);
  for (cplx w : {cplx(3.0, 0.0), cplx(0.2, 1.0)})
    CHECK(std::abs(cauchy_C(w, phi, zero) - (-(1.0 / w) / (1.0 - 1.0 / (2.0 * w)))) < 1e-14);
}

TEST_CASE("epsilon schedules") {
  const auto s = EpsilonSchedule::standard();
  REQUIRE(s.eps.size() == 9);
  CHECK(s.eps.front() == 1e-2);
  CHECK(s.eps.back() == doctest::Approx(1e-2 / 256));
  CHECK(s.largest() == 1e-2);
  EpsilonSchedule bad{{1e-2, 1e-2, 1e-3}};
  CHECK_THROWS_AS(stieltjes_density(FunctionalSpec::delta_at_0(), quarter, 0.0, bad), DomainError);
  EpsilonSchedule negative{{1e-2, -1e-3, -1e-2}};
  CHECK_THROWS_AS(stieltjes_density(FunctionalSpec::delta_at_0(), quarter, 0.0, negative), DomainError);
}

TEST_CASE("Stieltjes inversion recovers the Plancherel density") {
  const auto s0 = stieltjes_density(FunctionalSpec::delta_at_0(), quarter, 0.0);
  CHECK(s0.converged);
  CHECK(s0.density.real() == doctest::Approx(std::sqrt(3.0) / kPi).epsilon(1e-6));
  for (double r : {0.1, 0.25, 0.5}) {
    const Param p(r);
    for (double t : interior_grid(p, 60)) {
      const auto s = stieltjes_density(FunctionalSpec::delta_at_0(), p, t);
      CHECK(s.converged);
      CHECK(std::abs(s.density - plancherel_density(t, r)) < 1e-4);
    }
  }
}

TEST_CASE("Stieltjes inversion of geometric functionals") {
  const auto s = stieltjes_density(FunctionalSpec::geometric(2.0), quarter, 0.5);
  CHECK(s.converged);
  CHECK(std::abs(s.density - geometric_density(0.5, 2.0, 0.25)) < 1e-4);
  const cplx lam = std::polar(2.0, kPi / 6);
  for (double t : {-0.6, 0.0, 0.4}) {
    const auto z = stieltjes_density(FunctionalSpec::geometric(lam), quarter, t);
    CHECK(z.converged);
    CHECK(std::abs(z.density - geometric_density(t, lam, 0.25)) < 1e-4);
  }
}

TEST_CASE("divergence on the critical circle") {
  const cplx lam = std::polar(std::sqrt(3.0), kPi / 4);
  const auto phi = FunctionalSpec::geometric(lam);
  const double t0 = (0.25 * lam + 0.75 / lam).real();
  for (double dt : {-0.02, 0.0, 0.01, 0.03}) CHECK_FALSE(stieltjes_density(phi, quarter, t0 + dt).converged);
  // Far from the would-be singularity the limit still exists.
  CHECK(stieltjes_density(phi, quarter, -0.5).converged);
}

TEST_CASE("atom detection") {
  const auto a = detect_atom(FunctionalSpec::geometric(1.5), quarter, 0.875);
  CHECK(a.converged);
  CHECK(a.present);
  CHECK(std::abs(a.weight - 4.0 / 9.0) < 1e-6);
  const auto none = detect_atom(FunctionalSpec::geometric(2.0), quarter, 0.875);
  CHECK(none.converged);
  CHECK_FALSE(none.present);
  CHECK(none.weight == cplx(0.0));
  for (double edge : {-1.0, 1.0}) {
    const auto e = detect_atom(FunctionalSpec::delta_at_0(), quarter, edge);
    CHECK_FALSE(e.present);
    CHECK(e.weight == cplx(0.0));
  }
  const auto unit = detect_atom(FunctionalSpec::geometric(-1.0), quarter, -1.0);
  CHECK(unit.present);
  CHECK(std::abs(unit.weight - 1.0) < 1e-6);
  // The cut endpoint is reached with the half-power extrapolation.
  const auto arc = detect_atom(FunctionalSpec::delta_at_0(), Param(Rational(1, 2)), 1.0);
  CHECK_FALSE(arc.present);
  CHECK_THROWS_AS(detect_atom(FunctionalSpec::delta_at_0(), quarter, 1.5), DomainError);
}

TEST_CASE("inversion over a grid skips points next to atoms") {
  const auto phi = FunctionalSpec::geometric(1.5);
  const auto grid = interior_grid(quarter, 200);
  REQUIRE(grid.size() == 200);
  CHECK(grid.front() == doctest::Approx(-0.9 * std::sqrt(3.0) / 2));
  CHECK(grid.back() == doctest::Approx(0.9 * std::sqrt(3.0) / 2));
  const auto res = invert(phi, quarter, grid);
  CHECK(res.exclusion_radius == doctest::Approx(0.1));
  CHECK(res.grid.size() + res.excluded_points == 200);
  CHECK(res.excluded_points > 0);
  for (const auto& s : res.grid) CHECK(std::abs(s.t - 0.875) >= 0.1);
  CHECK(res.densities_converged());
  const auto atom = std::find_if(res.atoms.begin(), res.atoms.end(), [](const auto& a) { return a.present; });
  REQUIRE(atom != res.atoms.end());
  CHECK(atom->location == 0.875);
  CHECK_THROWS_AS(interior_grid(quarter, 1), DomainError);
  CHECK_THROWS_AS(interior_grid(quarter, 10, 0.5), DomainError);
}

TEST_CASE("concurrent density evaluation matches serial") {
  const auto phi = FunctionalSpec::geometric(cplx(1.2, 1.7));
  const auto grid = interior_grid(quarter, 64);
  std::vector<DensitySample> serial, parallel(grid.size());
  for (double t : grid) serial.push_back(stieltjes_density(phi, quarter, t));
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < 4; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t k = w; k < grid.size(); k += 4) parallel[k] = stieltjes_density(phi, quarter, grid[k]);
    });
  for (auto& t : workers) t.join();
  for (std::size_t k = 0; k < grid.size(); ++k) CHECK(parallel[k].density == serial[k].density);
}
