#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dftatoms/appendix.hpp"
#include "dftatoms/constants.hpp"
#include "dftatoms/rng.hpp"

using namespace dfta;

namespace {

// Closed-form average of |y|^(-alpha) over B_R(x) in d = 3: the shell
// fraction reduces to pi y^(1-alpha) (R^2 - (y-1)^2) for |x| = 1, which
// integrates to a polynomial in powers of y.
double closed_form_average_d3(double alpha, double s, double radius) {
  auto primitive = [&](double y) {
    // int y^(1-a) (R^2 - (y-s)^2) dy
    //   = (R^2 - s^2) y^(2-a)/(2-a) + 2 s y^(3-a)/(3-a) - y^(4-a)/(4-a).
    return (radius * radius - s * s) * std::pow(y, 2.0 - alpha) /
               (2.0 - alpha) +
           2.0 * s * std::pow(y, 3.0 - alpha) / (3.0 - alpha) -
           std::pow(y, 4.0 - alpha) / (4.0 - alpha);
  };
  double inner = 0.0;
  double lo = std::abs(s - radius);
  if (radius > s) {
    inner = 4.0 * pi * std::pow(radius - s, 3.0 - alpha) / (3.0 - alpha);
    lo = radius - s;
  }
  const double hi = s + radius;
  const double partial = (pi / s) * (primitive(hi) - primitive(lo));
  return (inner + partial) / ((4.0 * pi / 3.0) * std::pow(radius, 3));
}

}  // namespace

TEST_CASE("maximal function of inverse powers") {
  SUBCASE("alpha = 0 averages the constant 1") {
    for (int d : {1, 2, 3}) {
      appendix::MaximalFunctionQuery q{0.0, d};
      CHECK(appendix::maximal_function_power(q, 0.7) ==
            doctest::Approx(1.0).epsilon(1e-10));
    }
  }

  SUBCASE("alpha >= d diverges") {
    appendix::MaximalFunctionQuery q{3.0, 3};
    CHECK_THROWS_AS(appendix::maximal_function_power(q, 1.0),
                    std::domain_error);
  }

  SUBCASE("eigenrelation: M(|.|^-a) |x|^a constant across a decade") {
    for (double alpha : {0.5, 1.0, 1.5}) {
      appendix::MaximalFunctionQuery q{alpha, 3};
      const double base =
          appendix::maximal_function_power(q, 1.0);
      for (double x : {0.1, 10.0}) {
        const double value = appendix::maximal_function_power(q, x);
        CHECK(value * std::pow(x, alpha) ==
              doctest::Approx(base).epsilon(1e-3));
      }
    }
  }

  SUBCASE("d = 3 quadrature agrees with the closed-form oracle") {
    appendix::MaximalFunctionQuery q{1.0, 3};
    const double numeric = appendix::maximal_function_power(q, 1.0);
    // Scan the closed form over the same radius range.
    double best = 0.0;
    for (int i = 0; i <= 400000; ++i) {
      const double radius = 1e-3 * std::pow(10.0, 6.0 * i / 400000.0);
      best = std::max(best, closed_form_average_d3(1.0, 1.0, radius));
    }
    CHECK(numeric == doctest::Approx(best).epsilon(1e-4));
  }

  SUBCASE("d = 1 reduces to an exact elementary integral") {
    // For alpha in (0,1), x=1: the average over [1-R, 1+R] has the
    // closed form ((1+R)^(1-a) - sgn-adjusted |1-R|^(1-a)) / (2R(1-a)).
    const double alpha = 0.5;
    appendix::MaximalFunctionQuery q{alpha, 1};
    const double numeric = appendix::maximal_function_power(q, 1.0);
    double best = 0.0;
    for (int i = 0; i <= 400000; ++i) {
      const double radius = 1e-3 * std::pow(10.0, 6.0 * i / 400000.0);
      double integral;
      if (radius <= 1.0)
        integral = (std::pow(1.0 + radius, 1.0 - alpha) -
                    std::pow(1.0 - radius, 1.0 - alpha)) /
                   (1.0 - alpha);
      else
        integral = (std::pow(1.0 + radius, 1.0 - alpha) +
                    std::pow(radius - 1.0, 1.0 - alpha)) /
                   (1.0 - alpha);
      best = std::max(best, integral / (2.0 * radius));
    }
    CHECK(numeric == doctest::Approx(best).epsilon(1e-6));
  }
}

TEST_CASE("scaled Thomas-Fermi infimum with root potential") {
  SUBCASE("no coupling means rho = 0 is optimal") {
    CHECK(appendix::scaled_infimum(1.0, 1.0, 0.0) == 0.0);
  }

  SUBCASE("matches the closed-form value at gamma = Z = C = 1") {
    // Analytic minimization gives I = -(9 pi^2/128) mu^(-7/2) with
    // mu = (7 pi^2/128)^(2/9).
    const double mu = std::pow(7.0 * pi * pi / 128.0, 2.0 / 9.0);
    const double expected =
        -(9.0 * pi * pi / 128.0) * std::pow(mu, -3.5);
    const double numeric = appendix::scaled_infimum(1.0, 1.0, 1.0);
    CHECK(std::abs(numeric - expected) <= 1e-4 * std::abs(expected));
  }

  SUBCASE("scaling law I = Z^(13/9) gamma^(-1/3) I(1,1)") {
    const double base = appendix::scaled_infimum(1.0, 1.0, 1.0);
    for (auto [gamma, z] : {std::pair{2.0, 3.0}, std::pair{0.5, 10.0}}) {
      const double lhs = appendix::scaled_infimum(gamma, z, 1.0);
      const double rhs = std::pow(z, 13.0 / 9.0) / std::cbrt(gamma) * base;
      CHECK(std::abs(lhs - rhs) <= 1e-3 * std::abs(rhs));
    }
  }

  SUBCASE("monotone in the coupling and the kinetic constant") {
    double prev = 1.0;
    for (double c : {0.0, 0.5, 1.0, 2.0}) {
      const double value = appendix::scaled_infimum(1.0, 2.0, c);
      CHECK(value <= prev + 1e-12);
      prev = value;
    }
    double prev_gamma = -1e300;
    for (double gamma : {0.5, 1.0, 2.0}) {
      const double value = appendix::scaled_infimum(gamma, 2.0, 1.0);
      CHECK(value >= prev_gamma - 1e-12);
      prev_gamma = value;
    }
  }
}
