#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dftatoms/constants.hpp"
#include "dftatoms/rng.hpp"
#include "dftatoms/thomasfermi.hpp"
#include "dftatoms/verify.hpp"

using namespace dfta;

TEST_CASE("tf constants") {
  // (3 pi^2)^(2/3) / 2 for q = 2.
  tf::TfConstants c;
  CHECK(c.gamma ==
        doctest::Approx(0.5 * std::pow(3.0 * pi * pi, 2.0 / 3.0))
            .epsilon(1e-14));
  CHECK(tf_lower_bound_coefficient() == doctest::Approx(1.46).epsilon(2e-3));
}

TEST_CASE("tf functional evaluation") {
  auto grid = RadialGrid::make_default();

  SUBCASE("zero density has zero energy") {
    RadialDensity rho(grid, std::vector<double>(grid.size(), 0.0));
    CHECK(tf::tf_energy(rho, 1.0) == 0.0);
    CHECK_THROWS(tf::tf_energy(rho, -1.0));
  }

  SUBCASE("random densities respect the -1.46 Z^(7/3) lower bound") {
    Rng rng(41);
    const double coeff = tf_lower_bound_coefficient();
    for (double z : {1.0, 4.0, 16.0}) {
      for (int rep = 0; rep < 50; ++rep) {
        auto rho = verify::random_radial_density(grid, rng, 1.2 * z);
        CHECK(tf::tf_energy(rho, z) >= -coeff * std::pow(z, 7.0 / 3.0));
      }
    }
  }

  SUBCASE("strict convexity with midpoint margin") {
    Rng rng(43);
    for (int rep = 0; rep < 20; ++rep) {
      auto rho = verify::random_radial_density(grid, rng, 2.0);
      auto tau = verify::random_radial_density(grid, rng, 2.0);
      std::vector<double> mid(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i)
        mid[i] = 0.5 * (rho.values()[i] + tau.values()[i]);
      const double lhs = tf::tf_energy(RadialDensity(grid, mid), 2.0);
      const double rhs =
          0.5 * (tf::tf_energy(rho, 2.0) + tf::tf_energy(tau, 2.0));
      CHECK(rhs - lhs >= -1e-10);
    }
    // Equality at rho = tau.
    auto rho = verify::random_radial_density(grid, rng, 2.0);
    CHECK(tf::tf_energy(rho, 2.0) ==
          doctest::Approx(tf::tf_energy(rho, 2.0)));
  }
}

TEST_CASE("neutral Thomas-Fermi atom") {
  auto sol = tf::solve_tf_neutral(1.0);

  SUBCASE("reference energy and neutrality at Z = 1") {
    CHECK(sol.energy == doctest::Approx(-0.7687).epsilon(1.4e-3));
    CHECK(std::abs(sol.energy - (-0.7687)) < 1e-3);
    CHECK(std::abs(sol.rho.mass() - 1.0) < 1e-4);
    CHECK(sol.residual < 1e-6);
    CHECK(sol.mu == 0.0);
  }

  SUBCASE("energy from the functional matches the solver value") {
    CHECK(tf::tf_energy(sol.rho, 1.0) ==
          doctest::Approx(sol.energy).epsilon(1e-12));
  }

  SUBCASE("scaling relations") {
    auto z10 = tf::solve_tf_neutral(10.0);
    CHECK(std::abs(z10.energy / std::pow(10.0, 7.0 / 3.0) - sol.energy) <
          1e-3);
    // Pointwise density scaling at Z = 8.
    auto z8 = tf::solve_tf_neutral(8.0);
    const auto& r1 = sol.rho.grid().nodes();
    const auto& v1 = sol.rho.values();
    const double scale = std::pow(8.0, 1.0 / 3.0);
    for (double r : {1e-3, 1e-2, 0.1, 0.5, 1.0, 3.0}) {
      // rho_8(r) should equal 64 rho_1(2 r).
      const auto& r8 = z8.rho.grid().nodes();
      const auto& v8 = z8.rho.values();
      auto sample = [](const std::vector<double>& xs,
                       const std::vector<double>& ys, double x) {
        auto it = std::lower_bound(xs.begin(), xs.end(), x);
        std::size_t k = std::min<std::size_t>(
            std::max<std::ptrdiff_t>(it - xs.begin(), 1), xs.size() - 1);
        const double t = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
        return (1.0 - t) * ys[k - 1] + t * ys[k];
      };
      const double lhs = sample(r8, v8, r);
      const double rhs = 64.0 * sample(r1, v1, scale * r);
      CHECK(std::abs(lhs - rhs) <= 2e-3 * std::abs(rhs));
    }
  }

  SUBCASE("minimizer shape: phi >= 0, rho decreasing and convex") {
    const auto& rho = sol.rho.values();
    const auto& r = sol.rho.grid().nodes();
    for (double phi : sol.phi) CHECK(phi >= 0.0);
    const double scale = rho.front();
    for (std::size_t i = 0; i + 1 < rho.size(); ++i)
      CHECK(rho[i + 1] <= rho[i] + 1e-12 * scale);
    for (std::size_t i = 1; i + 1 < rho.size(); ++i) {
      const double t = (r[i] - r[i - 1]) / (r[i + 1] - r[i - 1]);
      const double chord = (1.0 - t) * rho[i - 1] + t * rho[i + 1];
      CHECK(rho[i] <= chord + 1e-10 * scale);
    }
  }

  SUBCASE("two shooting brackets agree pointwise") {
    auto grid = tf::tf_solver_grid(2.0);
    auto a = tf::solve_tf_neutral(2.0, grid);
    auto b = tf::solve_tf_constrained(2.0, 2.0, grid);
    const double scale = a.rho.values().front();
    for (std::size_t i = 0; i < grid.size(); ++i)
      CHECK(std::abs(a.rho.values()[i] - b.rho.values()[i]) <= 1e-6 * scale);
  }
}

TEST_CASE("constrained Thomas-Fermi atom") {
  const double z = 2.0;
  auto grid = tf::tf_solver_grid(z);
  auto neutral = tf::solve_tf_neutral(z, grid);

  SUBCASE("N = Z reproduces the neutral solution") {
    auto sol = tf::solve_tf_constrained(z, z, grid);
    CHECK(sol.energy == doctest::Approx(neutral.energy).epsilon(1e-6));
    CHECK(sol.constrained_boundary);
  }

  SUBCASE("N = Z/2 sits on the mass shell with higher energy") {
    auto sol = tf::solve_tf_constrained(z, z / 2.0, grid);
    CHECK(sol.rho.mass() == doctest::Approx(z / 2.0).epsilon(1e-4));
    CHECK(sol.energy > neutral.energy);
    CHECK(sol.mu > 0.0);
    CHECK(sol.residual < 1e-6);
    CHECK(sol.constrained_boundary);
  }

  SUBCASE("N > Z returns the neutral minimizer, flagged off-shell") {
    auto sol = tf::solve_tf_constrained(z, z + 1.0, grid);
    CHECK_FALSE(sol.constrained_boundary);
    CHECK(sol.energy == doctest::Approx(neutral.energy).epsilon(1e-8));
  }

  SUBCASE("E(Z, .) is decreasing and convex in N") {
    std::vector<double> masses{0.4, 0.8, 1.2, 1.6, 2.0};
    std::vector<double> energies;
    for (double n : masses)
      energies.push_back(tf::solve_tf_constrained(z, n, grid).energy);
    for (std::size_t i = 0; i + 1 < energies.size(); ++i)
      CHECK(energies[i + 1] < energies[i]);
    for (std::size_t i = 1; i + 1 < energies.size(); ++i)
      CHECK(energies[i + 1] - 2.0 * energies[i] + energies[i - 1] >= -1e-8);
  }
}
