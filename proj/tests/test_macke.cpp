#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dftatoms/constants.hpp"
#include "dftatoms/fockspace.hpp"
#include "dftatoms/macke.hpp"
#include "dftatoms/rng.hpp"

using namespace dfta;

namespace {

std::vector<double> gaussian_line_density(const macke::LineGrid& grid,
                                          double mass) {
  std::vector<double> rho(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    rho[i] = std::exp(-0.5 * grid.nodes[i] * grid.nodes[i]);
  const double m = grid.integrate(rho);
  for (auto& v : rho) v *= mass / m;
  return rho;
}

std::vector<double> random_line_density(const macke::LineGrid& grid, Rng& rng,
                                        int mass) {
  std::vector<double> rho(grid.size(), 0.0);
  const int bumps = 2 + static_cast<int>(rng.integer(2));
  for (int b = 0; b < bumps; ++b) {
    const double c = rng.uniform(-2.0, 2.0);
    const double w = rng.uniform(0.9, 2.0);
    const double amp = rng.uniform(0.3, 1.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double u = (grid.nodes[i] - c) / w;
      rho[i] += amp * std::exp(-0.5 * u * u);
    }
  }
  const double m = grid.integrate(rho);
  for (auto& v : rho) v *= mass / m;
  return rho;
}

}  // namespace

TEST_CASE("one-dimensional Macke orbitals") {
  auto grid = macke::LineGrid::uniform(16385, -8.0, 8.0);

  SUBCASE("single orbital reproduces the density exactly") {
    auto rho = gaussian_line_density(grid, 1.0);
    auto set = macke::macke_orbitals_1d(grid, rho, 0.37);
    auto reproduced = set.density();
    for (std::size_t i = 0; i < grid.size(); ++i)
      CHECK(std::abs(reproduced[i] - rho[i]) <= 1e-14 * (1.0 + rho[i]));
    // CDF properties.
    const auto& y = set.cdf();
    CHECK(y.front() <= 1e-12);
    CHECK(y.back() == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i + 1 < y.size(); ++i) CHECK(y[i + 1] >= y[i]);
  }

  SUBCASE("three orbitals are orthonormal to 1e-10") {
    auto rho = gaussian_line_density(grid, 3.0);
    auto set = macke::macke_orbitals_1d(grid, rho, 0.1);
    auto gram = set.gram();
    CHECK((gram - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <=
          1e-10);
    auto reproduced = set.density();
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (rho[i] > 1e-12)
        CHECK(std::abs(reproduced[i] - rho[i]) / rho[i] <= 1e-10);
  }

  SUBCASE("nonintegral mass is rejected") {
    auto rho = gaussian_line_density(grid, 1.5);
    CHECK_THROWS_AS(macke::macke_orbitals_1d(grid, rho, 0.0),
                    std::invalid_argument);
  }
}

TEST_CASE("one-dimensional kinetic upper bound") {
  auto grid = macke::LineGrid::uniform(8193, -9.0, 9.0);

  SUBCASE("N = 1 keeps only the gradient term") {
    auto rho = gaussian_line_density(grid, 1.0);
    std::vector<double> sqrt_rho(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i)
      sqrt_rho[i] = std::sqrt(rho[i]);
    auto d = grid.derivative(sqrt_rho);
    std::vector<double> integrand(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i)
      integrand[i] = d[i] * d[i];
    const double gradient_only = 0.5 * grid.integrate(integrand);
    CHECK(macke::kinetic_upper_bound_1d(grid, rho, 1) ==
          doctest::Approx(gradient_only).epsilon(1e-12));
  }

  SUBCASE("direct Slater kinetic matches the bound at the optimal phase") {
    Rng rng(67);
    for (int n : {1, 2, 3, 5}) {
      auto rho = random_line_density(grid, rng, n);
      auto [a, direct] = macke::optimal_phase_1d(grid, rho);
      const double bound = macke::kinetic_upper_bound_1d(grid, rho, n);
      CHECK(std::abs(direct - bound) <= 1e-6 * (1.0 + std::abs(bound)));
      // The analytic optimum is the midpoint (N+1)/2 modulo integers.
      const double frac = std::abs(std::remainder(a - 0.5 * (n + 1), 1.0));
      CHECK(frac <= 1e-3);
    }
  }

  SUBCASE("upper-bounds the free-fermion minimum on a discretized line") {
    // 4-site toy: Ritz with Loewdin-orthonormalized Macke vectors can
    // never undercut the exact free minimum from the Fock-space oracle.
    const int sites = 4;
    const double spacing = 1.0;
    Eigen::MatrixXcd hopping = Eigen::MatrixXcd::Zero(sites, sites);
    for (int i = 0; i + 1 < sites; ++i) {
      hopping(i, i) += 1.0 / (spacing * spacing);
      hopping(i + 1, i + 1) += 1.0 / (spacing * spacing);
      hopping(i, i + 1) = -0.5 / (spacing * spacing);
      hopping(i + 1, i) = -0.5 / (spacing * spacing);
    }
    fock::ManyBodyOperatorSpec spec(sites);
    spec.one_body = hopping;
    auto free_min = fock::ground_state(spec, 2);

    std::vector<double> site_density{0.4, 0.6, 0.6, 0.4};
    std::vector<double> cdf(sites);
    double acc = 0.0;
    for (int i = 0; i < sites; ++i) {
      acc += site_density[i] / 2.0;
      cdf[i] = acc - 0.5 * site_density[i] / 2.0;
    }
    Eigen::MatrixXcd orbitals(sites, 2);
    for (int n = 0; n < 2; ++n)
      for (int i = 0; i < sites; ++i) {
        const double phase = 2.0 * pi * (n + 1 - 1.5) * cdf[i];
        orbitals(i, n) = std::sqrt(site_density[i] / 2.0) *
                         fock::Complex(std::cos(phase), std::sin(phase));
      }
    // Loewdin orthonormalization.
    Eigen::MatrixXcd overlap = orbitals.adjoint() * orbitals;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(overlap);
    Eigen::MatrixXcd inv_sqrt =
        es.eigenvectors() *
        es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
        es.eigenvectors().adjoint();
    Eigen::MatrixXcd ortho = orbitals * inv_sqrt;
    const double slater = (ortho.adjoint() * hopping * ortho).trace().real();
    CHECK(slater >= free_min.energy - 1e-12);
  }
}

TEST_CASE("two-dimensional Macke orbitals") {
  SUBCASE("product Gaussian with N = 1 reproduces the density") {
    auto g = macke::LineGrid::uniform(257, -7.0, 7.0);
    macke::TensorGrid2d grid{g, g};
    std::vector<double> rho(grid.size());
    for (std::size_t j = 0; j < g.size(); ++j)
      for (std::size_t i = 0; i < g.size(); ++i)
        rho[j * g.size() + i] = std::exp(
            -0.5 * (g.nodes[i] * g.nodes[i] + g.nodes[j] * g.nodes[j]));
    std::vector<double> row(g.size()), rowmass(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
      for (std::size_t i = 0; i < g.size(); ++i) row[i] = rho[j * g.size() + i];
      rowmass[j] = g.integrate(row);
    }
    const double mass = g.integrate(rowmass);
    for (auto& v : rho) v /= mass;
    auto set = macke::macke_orbitals_2d(grid, rho, {{0, 0}}, {0.2, 0.9});
    auto reproduced = set.density();
    for (std::size_t k = 0; k < rho.size(); ++k)
      CHECK(std::abs(reproduced[k] - rho[k]) <= 1e-13 * (1.0 + rho[k]));
  }

  SUBCASE("four orbitals with distinct indices are orthonormal") {
    auto g = macke::LineGrid::uniform(2049, -15.0, 15.0);
    macke::TensorGrid2d grid{g, g};
    std::vector<double> rho(grid.size());
    for (std::size_t j = 0; j < g.size(); ++j)
      for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.nodes[i], y = g.nodes[j];
        rho[j * g.size() + i] = std::exp(-0.25 * (x * x + y * y) / 2.0);
      }
    std::vector<double> row(g.size()), rowmass(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
      for (std::size_t i = 0; i < g.size(); ++i) row[i] = rho[j * g.size() + i];
      rowmass[j] = g.integrate(row);
    }
    const double mass = g.integrate(rowmass);
    for (auto& v : rho) v *= 4.0 / mass;
    std::vector<std::array<int, 2>> indices{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    auto set = macke::macke_orbitals_2d(grid, rho, indices, {0.3, 0.7});
    auto gram = set.gram();
    CHECK((gram - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() <=
          1e-8);

    // |det J| = rho/N pointwise by the telescoping product.
    auto det = set.det_jacobian();
    const double peak = *std::max_element(rho.begin(), rho.end());
    double worst = 0.0;
    for (std::size_t k = 0; k < rho.size(); ++k)
      if (rho[k] > 1e-6 * peak)
        worst = std::max(worst,
                         std::abs(det[k] - rho[k] / 4.0) / (rho[k] / 4.0));
    CHECK(worst <= 1e-8);
  }

  SUBCASE("interior zero slice is rejected") {
    auto g = macke::LineGrid::uniform(65, -4.0, 4.0);
    macke::TensorGrid2d grid{g, g};
    std::vector<double> rho(grid.size(), 0.0);
    for (std::size_t j = 0; j < g.size(); ++j)
      for (std::size_t i = 0; i < g.size(); ++i)
        if (j != 30)
          rho[j * g.size() + i] =
              std::exp(-0.5 * (g.nodes[i] * g.nodes[i] +
                               g.nodes[j] * g.nodes[j]));
    // Normalize to integer mass.
    std::vector<double> row(g.size()), rowmass(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
      for (std::size_t i = 0; i < g.size(); ++i) row[i] = rho[j * g.size() + i];
      rowmass[j] = g.integrate(row);
    }
    const double mass = g.integrate(rowmass);
    for (auto& v : rho) v /= mass;
    CHECK_THROWS_AS(
        macke::macke_orbitals_2d(grid, rho, {{0, 0}}, {0.0, 0.0}),
        std::domain_error);
  }
}

TEST_CASE("radial Macke orbitals") {
  auto grid = RadialGrid::logarithmic(12000, 1e-5, 35.0);
  const auto& r = grid.nodes();
  auto hydrogenic_channel = [&](double mass) {
    std::vector<double> rho(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      rho[i] = 4.0 * r[i] * r[i] * std::exp(-2.0 * r[i]);
    const double m = integrate_radial(grid, rho);
    for (auto& v : rho) v *= mass / m;
    return rho;
  };

  SUBCASE("single s orbital reproduces the channel density") {
    tfw::ChannelDensities channels(grid, {hydrogenic_channel(1.0)});
    auto set = macke::radial_macke(channels, {{0, 0, 1, 1}}, {1.0});
    auto rho = set.channel_density(0);
    const auto& expected = channels.channels()[0];
    for (std::size_t i = 0; i < grid.size(); ++i)
      CHECK(std::abs(rho[i] - expected[i]) <= 1e-12 * (1.0 + expected[i]));
  }

  SUBCASE("two orbitals in one channel have Gram identity") {
    tfw::ChannelDensities channels(grid, {hydrogenic_channel(2.0)});
    auto set = macke::radial_macke(channels, {{0, 0, 1, 2}}, {1.5});
    auto gram = set.block_gram(set.blocks()[0]);
    CHECK((gram - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() <=
          1e-10);
  }

  SUBCASE("channel kinetic matches the Hellmann-Weizsaecker term structure") {
    for (int l : {0, 1}) {
      for (int count : {2, 3}) {
        std::vector<std::vector<double>> per_l(l + 1,
                                               std::vector<double>(grid.size(), 0.0));
        per_l[l] = hydrogenic_channel(static_cast<double>(count));
        if (l == 1) {
          // p channels must vanish faster at the origin; r^4 profile.
          for (std::size_t i = 0; i < grid.size(); ++i)
            per_l[1][i] = r[i] * r[i] * r[i] * r[i] * std::exp(-2.0 * r[i]);
          const double m = integrate_radial(grid, per_l[1]);
          for (auto& v : per_l[1]) v *= count / m;
        }
        tfw::ChannelDensities channels(grid, per_l);
        const double a_opt = 0.5 * (count + 1);
        auto set = macke::radial_macke(channels, {{l, 0, 1, count}},
                                       std::vector<double>(l + 1, a_opt));
        const double direct = set.block_kinetic(set.blocks()[0]);
        // Term structure of Eq-style channel kinetic at optimal phase:
        // 1/2 int (sqrt(rho)')^2 + l(l+1) rho/r^2
        //   + 4 pi^2 [N(N^2-1)/12] (rho/N)^3.
        const auto& rho = channels.channels()[l];
        std::vector<double> sqrt_rho(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
          sqrt_rho[i] = std::sqrt(rho[i]);
        auto d = radial_derivative(grid, sqrt_rho);
        std::vector<double> integrand(grid.size());
        const double phase_coef = 4.0 * pi * pi * count *
                                  (count * count - 1.0) / 12.0 /
                                  std::pow(static_cast<double>(count), 3);
        for (std::size_t i = 0; i < grid.size(); ++i) {
          integrand[i] = d[i] * d[i] +
                         l * (l + 1.0) * rho[i] / (r[i] * r[i]) +
                         phase_coef * rho[i] * rho[i] * rho[i];
        }
        const double expected = 0.5 * integrate_radial(grid, integrand);
        CHECK(std::abs(direct - expected) <=
              1e-6 * (1.0 + std::abs(expected)));
      }
    }
  }

  SUBCASE("zero-mass channel with occupation is rejected") {
    tfw::ChannelDensities channels(
        grid, {std::vector<double>(grid.size(), 0.0)});
    CHECK_THROWS_AS(macke::radial_macke(channels, {{0, 0, 1, 1}}, {1.0}),
                    std::domain_error);
  }

  SUBCASE("channel mass must match its occupation count") {
    tfw::ChannelDensities channels(grid, {hydrogenic_channel(1.5)});
    CHECK_THROWS_AS(macke::radial_macke(channels, {{0, 0, 1, 2}}, {1.5}),
                    std::invalid_argument);
  }
}
