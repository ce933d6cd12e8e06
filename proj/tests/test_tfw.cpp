#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dftatoms/constants.hpp"
#include "dftatoms/hellmann.hpp"
#include "dftatoms/rng.hpp"
#include "dftatoms/tfw.hpp"
#include "dftatoms/verify.hpp"

using namespace dfta;

TEST_CASE("tfw functional evaluation") {
  auto grid = RadialGrid::make_default();

  SUBCASE("zero density evaluates to zero") {
    RadialDensity rho(grid, std::vector<double>(grid.size(), 0.0));
    CHECK(tfw::tfw_energy(rho, 1.0, 1.0) == 0.0);
  }

  SUBCASE("hydrogen 1s Weizsaecker term is 1/2") {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      values[i] = std::exp(-2.0 * grid.nodes()[i]) / pi;
    RadialDensity rho(grid, values);
    CHECK(tfw::weizsaecker_term(rho, 1.0) ==
          doctest::Approx(0.5).epsilon(1e-7));
  }

  SUBCASE("gradient term never lowers the TF energy") {
    Rng rng(51);
    for (int rep = 0; rep < 100; ++rep) {
      auto rho = verify::random_radial_density(grid, rng, 2.0);
      CHECK(tfw::tfw_energy(rho, 1.0, 0.2) >= tf::tf_energy(rho, 1.0));
    }
  }

  SUBCASE("Weizsaecker term is convex") {
    Rng rng(53);
    for (int rep = 0; rep < 25; ++rep) {
      auto rho = verify::random_radial_density(grid, rng, 2.0);
      auto tau = verify::random_radial_density(grid, rng, 2.0);
      std::vector<double> mid(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i)
        mid[i] = 0.5 * (rho.values()[i] + tau.values()[i]);
      const double lhs = tfw::weizsaecker_term(RadialDensity(grid, mid), 1.0);
      const double rhs = 0.5 * (tfw::weizsaecker_term(rho, 1.0) +
                                tfw::weizsaecker_term(tau, 1.0));
      CHECK(rhs - lhs >= -1e-10);
    }
  }
}

TEST_CASE("tfw constrained minimization") {
  SUBCASE("neutral atom at lambda = 0.2 binds with mu > 0") {
    auto sol = tfw::minimize_tfw(1.0, 1.0, 0.2);
    CHECK(sol.bound);
    CHECK(sol.mu > 0.0);
    CHECK(sol.rho.mass() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(sol.euler_residual < 1e-8);
    CHECK(sol.max_accepted_increase <= 1e-12 * (1.0 + std::abs(sol.energy)));

    // First-order optimality: admissible perturbations do not lower E.
    Rng rng(59);
    const auto& grid = sol.rho.grid();
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<double> rho(sol.rho.values());
      for (std::size_t i = 0; i < rho.size(); ++i) {
        const double factor = 1.0 + 1e-4 * rng.normal();
        rho[i] *= factor * factor;
      }
      RadialDensity raw(grid, rho);
      const double scale = sol.rho.mass() / raw.mass();
      for (auto& v : rho) v *= scale;
      const double trial = tfw::tfw_energy(RadialDensity(grid, rho), 1.0, 0.2);
      CHECK(trial >= sol.energy - 1e-10);
    }
  }

  SUBCASE("supercritical N = 1.9 is flagged unbound") {
    tfw::TfwOptions opt;
    opt.throw_on_failure = false;
    auto sol = tfw::minimize_tfw(1.0, 1.9, 0.2, opt);
    CHECK_FALSE(sol.bound);
  }

  SUBCASE("lambda -> 0 approaches the constrained TF energy") {
    tfw::TfwOptions opt;
    opt.tol = 1e-7;
    auto sol = tfw::minimize_tfw(1.0, 1.0, 1e-3, opt);
    const double e_tf = tf::solve_tf_constrained(1.0, 1.0).energy;
    CHECK(std::abs(sol.energy - e_tf) <= 0.02 * std::abs(e_tf));
  }

  SUBCASE("argument validation") {
    CHECK_THROWS(tfw::minimize_tfw(1.0, 1.0, -0.1));
    CHECK_THROWS(tfw::minimize_tfw(1.0, -1.0, 0.2));
  }
}

TEST_CASE("critical charge bracketing") {
  auto bracket = tfw::critical_charge(1.0, 0.2);

  SUBCASE("bracket sits inside (Z, Z + 0.82]") {
    CHECK(bracket.n_lower > 1.0);
    CHECK(bracket.n_upper <= 1.0 + 0.82 + 1e-9);
    CHECK(bracket.n_upper >= bracket.n_lower);
  }

  SUBCASE("Benguria bound: below 2Z") {
    CHECK(bracket.n_upper < 2.0);
  }

  SUBCASE("the Benguria-Lieb cap formula") {
    CHECK(tfw::excess_charge_cap(1.0, 0.2) ==
          doctest::Approx(1.818).epsilon(2e-3));
  }
}

TEST_CASE("negative ions exist in TFW") {
  for (double z : {1.0, 2.0}) {
    tfw::TfwOptions opt;
    opt.throw_on_failure = false;
    auto sol = tfw::minimize_tfw(z, z + 0.05, 0.2, opt);
    CHECK(sol.bound);
    CHECK(sol.rho.mass() > z);
    CHECK(sol.rho.mass() < 2.0 * z);
  }
}

TEST_CASE("hellmann-weizsaecker functional") {
  auto grid = RadialGrid::logarithmic(4000, 1e-5, 35.0);
  const auto& r = grid.nodes();
  std::vector<double> rho(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    rho[i] = 4.0 * r[i] * r[i] * std::exp(-2.0 * r[i]);

  SUBCASE("all channels zero gives zero") {
    tfw::ChannelDensities channels(grid,
                                   {std::vector<double>(grid.size(), 0.0)});
    CHECK(tfw::hw_energy(channels, 1.0) == 0.0);
  }

  SUBCASE("hydrogenic s-channel matches the term-by-term oracle") {
    tfw::ChannelDensities channels(grid, {rho});
    auto terms = tfw::hw_energy_terms(channels, 1.0);
    // Analytic values for rho_0 = 4 r^2 e^(-2r):
    //   1/2 int (sqrt(rho)')^2 = 1/2 * 4 int e^(-2r)(1-r)^2 = 1/2
    //   int -rho/r = -4 int r e^(-2r) = -1
    //   cubic: (pi^2/24) int rho^3 = (pi^2/24) 64 * 6!/6^7
    //   hartree: D for the 1s profile = 5/16
    const double cubic = (pi * pi / 24.0) * 64.0 * 720.0 / 279936.0;
    CHECK(terms.gradient == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(terms.centrifugal == 0.0);
    CHECK(terms.cubic == doctest::Approx(cubic).epsilon(1e-8));
    CHECK(terms.external == doctest::Approx(-1.0).epsilon(1e-8));
    CHECK(terms.hartree == doctest::Approx(5.0 / 16.0).epsilon(1e-8));
  }

  SUBCASE("splitting into l = 0 and l = 1 halves changes only the "
          "centrifugal and cubic terms") {
    tfw::ChannelDensities one(grid, {rho});
    std::vector<double> half(rho);
    for (auto& v : half) v *= 0.5;
    tfw::ChannelDensities two(grid, {half, half});
    auto t1 = tfw::hw_energy_terms(one, 1.0);
    auto t2 = tfw::hw_energy_terms(two, 1.0);
    CHECK(t2.gradient == doctest::Approx(t1.gradient).epsilon(1e-10));
    CHECK(t2.external == doctest::Approx(t1.external).epsilon(1e-10));
    CHECK(t2.hartree == doctest::Approx(t1.hartree).epsilon(1e-10));
    // Centrifugal: only the l = 1 half contributes l(l+1) = 2.
    std::vector<double> integrand(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      integrand[i] = 2.0 * half[i] / (r[i] * r[i]);
    const double cent = 0.5 * integrate_radial(grid, integrand);
    CHECK(t2.centrifugal == doctest::Approx(cent).epsilon(1e-10));
    // Cubic: (1/2)^3 of the one-channel value per channel, with the
    // (2(2l+1))^2 denominators 4 and 36.
    const double cubic_expected =
        t1.cubic * (1.0 / 8.0) * (1.0 + 4.0 / 36.0);
    CHECK(t2.cubic == doctest::Approx(cubic_expected).epsilon(1e-10));
  }

  SUBCASE("negative channel values are rejected") {
    std::vector<double> bad(grid.size(), -0.1);
    CHECK_THROWS(tfw::ChannelDensities(grid, {bad}));
  }
}
