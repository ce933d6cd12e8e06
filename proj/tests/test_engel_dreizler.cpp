#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dftatoms/engel_dreizler.hpp"
#include "dftatoms/thomasfermi.hpp"
#include "dftatoms/tfw.hpp"

using namespace dfta;

namespace {

RadialDensity gaussian(const RadialGrid& grid, double mass, double width) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double u = grid.nodes()[i] / width;
    values[i] = std::exp(-0.5 * u * u);
  }
  RadialDensity raw(grid, values);
  const double s = mass / raw.mass();
  for (auto& v : values) v *= s;
  return RadialDensity(grid, std::move(values));
}

}  // namespace

TEST_CASE("kernel functions") {
  SUBCASE("vanish at t = 0 and reject t < 0") {
    auto k = ed::ed_kernels(0.0);
    CHECK(k.f2 == 0.0);
    CHECK(k.ttf == 0.0);
    CHECK(k.x == 0.0);
    CHECK_THROWS_AS(ed::ed_kernels(-0.1), std::domain_error);
  }

  SUBCASE("small-t expansions: ttf ~ (4/5) t^5 and x ~ 2 t^4") {
    const double t = 1e-3;
    auto k = ed::ed_kernels(t);
    CHECK(std::abs(k.ttf / std::pow(t, 5) - 0.8) <= 1e-5 * 0.8);
    CHECK(std::abs(k.x / std::pow(t, 4) - 2.0) <= 1e-5 * 2.0);
  }

  SUBCASE("series and direct branches agree at the switch") {
    for (double t : {0.05, 0.0799, 0.0801, 0.12}) {
      auto k = ed::ed_kernels(t);
      // Direct evaluation loses ~t^(-4) * eps digits; at t ~ 0.08 both
      // forms carry 10+ good digits.
      const double root = std::sqrt(t * t + 1.0);
      const double ash = std::log(t + root);
      const double direct =
          t * root * root * root + t * t * t * root - ash -
          (8.0 / 3.0) * t * t * t;
      CHECK(k.ttf == doctest::Approx(direct).epsilon(1e-8));
    }
  }

  SUBCASE("large t: ttf approaches 2 t^4") {
    const double t = 300.0;
    auto k = ed::ed_kernels(t);
    CHECK(k.ttf / (2.0 * std::pow(t, 4)) == doctest::Approx(1.0).epsilon(1e-2));
  }

  SUBCASE("kinetic kernels nonnegative, exchange kernel reported") {
    double min_f2 = 1e300, min_ttf = 1e300, min_x = 1e300;
    for (int i = 0; i <= 20000; ++i) {
      const double t = 1000.0 * i / 20000.0;
      auto k = ed::ed_kernels(t);
      min_f2 = std::min(min_f2, k.f2);
      min_ttf = std::min(min_ttf, k.ttf);
      min_x = std::min(min_x, k.x);
    }
    CHECK(min_f2 >= 0.0);
    CHECK(min_ttf >= 0.0);
    MESSAGE("min exchange kernel over [0, 1e3]: ", min_x);
  }
}

TEST_CASE("functional evaluation") {
  auto grid = RadialGrid::make_default();

  SUBCASE("zero density gives zero energy") {
    RadialDensity rho(grid, std::vector<double>(grid.size(), 0.0));
    ed::EdParams params;
    params.z = 10.0;
    CHECK(ed::ed_energy(rho, params) == 0.0);
  }

  SUBCASE("c -> infinity recovers TF kinetic and Dirac exchange") {
    auto rho = gaussian(grid, 6.0, 1.0);
    ed::EdParams params;
    params.c = 1e6;
    params.z = 6.0;
    params.lambda = 0.2;
    auto terms = ed::ed_energy_terms(rho, params);
    const double tf_ref = tf::tf_kinetic(rho);
    std::vector<double> dirac(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      dirac[i] = 4.0 * pi * grid.nodes()[i] * grid.nodes()[i] *
                 std::pow(rho.values()[i], 4.0 / 3.0);
    const double dirac_ref =
        0.75 * std::cbrt(3.0 / pi) * integrate_radial(grid, dirac);
    CHECK(std::abs(terms.kinetic - tf_ref) <= 1e-4 * tf_ref);
    CHECK(std::abs(terms.exchange - dirac_ref) <= 1e-4 * dirac_ref);
    // The inhomogeneity correction approaches the lambda-Weizsaecker term.
    const double weiz = tfw::weizsaecker_term(rho, params.lambda);
    CHECK(terms.weizsaecker / weiz == doctest::Approx(1.0).epsilon(1e-2));
  }

  SUBCASE("scaling scan at Z = 50 stays bounded below") {
    auto fine = RadialGrid::logarithmic(2000, 1e-8, 60.0);
    ed::EdParams params;
    params.z = 50.0;
    double min_energy = 1e300;
    for (int k = 0; k <= 24; ++k) {
      const double mu = std::pow(10.0, 4.0 * k / 24.0);
      auto rho = gaussian(fine, 50.0, 1.0 / mu);
      min_energy = std::min(min_energy, ed::ed_energy(rho, params));
    }
    CHECK(std::isfinite(min_energy));
    MESSAGE("scan minimum at Z=50: ", min_energy);
  }

  SUBCASE("energy rises when Z decreases") {
    auto rho = gaussian(grid, 4.0, 1.0);
    ed::EdParams small, large;
    small.z = 2.0;
    large.z = 8.0;
    CHECK(ed::ed_energy(rho, small) > ed::ed_energy(rho, large));
  }
}
