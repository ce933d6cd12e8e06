#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dftatoms/dmf.hpp"
#include "dftatoms/fockspace.hpp"
#include "dftatoms/rng.hpp"

using namespace dfta;
using dmf::DensityMatrix;
using fock::Complex;

TEST_CASE("density matrix invariants") {
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(3, 3);
  bad(0, 1) = 1.0;  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix(bad), std::invalid_argument);

  Eigen::MatrixXcd over = Eigen::MatrixXcd::Identity(3, 3) * 1.5;
  CHECK_THROWS_AS(DensityMatrix(over), std::invalid_argument);

  auto gamma = dmf::random_density_matrix(5, 2.5, 7);
  CHECK(gamma.trace() == doctest::Approx(2.5).epsilon(1e-10));
  for (int i = 0; i < 5; ++i) {
    CHECK(gamma.occupations()[i] >= 0.0);
    CHECK(gamma.occupations()[i] <= 1.0);
  }
  // Square root via natural orbitals.
  Eigen::MatrixXcd root = gamma.sqrt();
  CHECK((root * root - gamma.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("hf energy") {
  auto prob = dmf::random_problem(5, 71, true);

  SUBCASE("zero gamma gives zero") {
    DensityMatrix zero(Eigen::MatrixXcd::Zero(5, 5));
    CHECK(dmf::hf_energy(zero, prob) == 0.0);
  }

  SUBCASE("rank-one states carry no self-interaction") {
    Rng rng(73);
    Eigen::VectorXcd xi(5);
    for (int i = 0; i < 5; ++i) xi[i] = Complex(rng.normal(), rng.normal());
    xi.normalize();
    DensityMatrix gamma(xi * xi.adjoint());
    const double energy = dmf::hf_energy(gamma, prob);
    const double one_body = (xi.adjoint() * prob.spec.one_body * xi)(0).real();
    CHECK(energy == doctest::Approx(one_body).epsilon(1e-10));
    CHECK(prob.direct_energy(gamma.matrix()) ==
          doctest::Approx(prob.exchange_energy(gamma.matrix()))
              .epsilon(1e-10));
  }

  SUBCASE("exchange bounded by direct for psd kernels") {
    for (int rep = 0; rep < 200; ++rep) {
      auto gamma = dmf::random_density_matrix(5, 2.0, 100 + rep);
      CHECK(prob.direct_energy(gamma.matrix()) -
                prob.exchange_energy(gamma.matrix()) >=
            -1e-10);
    }
  }

  SUBCASE("dimension mismatch throws") {
    DensityMatrix small(Eigen::MatrixXcd::Zero(3, 3));
    CHECK_THROWS_AS(dmf::hf_energy(small, prob), std::invalid_argument);
  }
}

TEST_CASE("mueller energy") {
  auto prob = dmf::random_problem(5, 83, true);

  SUBCASE("projections give exactly the HF energy") {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(5, 5);
    p(1, 1) = p(4, 4) = 1.0;
    DensityMatrix gamma(p);
    CHECK(dmf::muller_energy(gamma, prob) ==
          doctest::Approx(dmf::hf_energy(gamma, prob)).epsilon(1e-12));
  }

  SUBCASE("never above HF on random density matrices") {
    for (int rep = 0; rep < 1000; ++rep) {
      auto gamma = dmf::random_density_matrix(5, 2.0, 500 + rep);
      CHECK(dmf::muller_energy(gamma, prob) <=
            dmf::hf_energy(gamma, prob) + 1e-10);
    }
  }

  SUBCASE("zero gamma gives zero") {
    DensityMatrix zero(Eigen::MatrixXcd::Zero(5, 5));
    CHECK(dmf::muller_energy(zero, prob) == 0.0);
  }
}

TEST_CASE("fock operator and gradients") {
  SUBCASE("free problems reduce to the one-body matrix") {
    fock::ManyBodyOperatorSpec spec(4);
    spec.one_body(0, 0) = -1.0;
    spec.one_body(1, 2) = Complex(0.0, 0.3);
    spec.one_body(2, 1) = Complex(0.0, -0.3);
    dmf::TwoBodyProblem prob(std::move(spec));
    auto gamma = dmf::random_density_matrix(4, 2.0, 3);
    CHECK((dmf::fock_operator(gamma, prob) - prob.spec.one_body)
              .cwiseAbs()
              .maxCoeff() <= 1e-14);
  }

  SUBCASE("finite differences confirm the HF gradient") {
    auto prob = dmf::random_problem(4, 89, true);
    Rng rng(91);
    auto gamma = dmf::random_density_matrix(4, 2.0, 11);
    auto f = dmf::fock_operator(gamma, prob);
    for (int rep = 0; rep < 5; ++rep) {
      Eigen::MatrixXcd delta(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          delta(i, j) = Complex(rng.normal(), rng.normal());
      delta = 0.5 * (delta + delta.adjoint());
      delta *= 0.25 / delta.cwiseAbs().maxCoeff();
      const double eps = 1e-5;
      // Keep eigenvalues inside [0,1]: shrink around the midpoint.
      Eigen::MatrixXcd base =
          0.5 * gamma.matrix() + 0.25 * Eigen::MatrixXcd::Identity(4, 4);
      DensityMatrix up(base + eps * delta);
      DensityMatrix down(base - eps * delta);
      const double fd =
          (dmf::hf_energy(up, prob) - dmf::hf_energy(down, prob)) /
          (2.0 * eps);
      DensityMatrix mid(base);
      const double analytic =
          (dmf::fock_operator(mid, prob) * delta).trace().real();
      CHECK(std::abs(fd - analytic) <= 1e-6 * (1.0 + std::abs(analytic)));
    }
  }

  SUBCASE("finite differences confirm the Mueller gradient") {
    auto prob = dmf::random_problem(4, 97, true);
    Rng rng(101);
    Eigen::MatrixXcd base =
        0.5 * dmf::random_density_matrix(4, 2.0, 13).matrix() +
        0.25 * Eigen::MatrixXcd::Identity(4, 4);
    for (int rep = 0; rep < 5; ++rep) {
      Eigen::MatrixXcd delta(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          delta(i, j) = Complex(rng.normal(), rng.normal());
      delta = 0.5 * (delta + delta.adjoint());
      delta *= 0.25 / delta.cwiseAbs().maxCoeff();
      const double eps = 1e-5;
      DensityMatrix up(base + eps * delta);
      DensityMatrix down(base - eps * delta);
      const double fd =
          (dmf::muller_energy(up, prob) - dmf::muller_energy(down, prob)) /
          (2.0 * eps);
      DensityMatrix mid(base);
      const double analytic =
          (dmf::muller_gradient(mid, prob) * delta).trace().real();
      CHECK(std::abs(fd - analytic) <= 1e-6 * (1.0 + std::abs(analytic)));
    }
  }
}

TEST_CASE("dmf minimization") {
  SUBCASE("free case fills the lowest one-body levels") {
    fock::ManyBodyOperatorSpec spec(4);
    const double eps[4] = {-2.0, -0.6, 0.4, 1.2};
    for (int m = 0; m < 4; ++m) spec.one_body(m, m) = eps[m];
    dmf::TwoBodyProblem prob(std::move(spec));
    auto res = dmf::minimize_dmf(prob, 2, dmf::Functional::hf);
    CHECK(res.energy == doctest::Approx(-2.6).epsilon(1e-8));
    CHECK(res.gamma.is_projection(1e-8));
  }

  SUBCASE("helium-like toy: HF above FCI, Mueller at or below HF") {
    auto prob = dmf::radial_s_channel_problem(6, 2.0);
    auto hf = dmf::minimize_dmf(prob, 2, dmf::Functional::hf);
    auto fci = fock::ground_state(prob.spec, 2);
    CHECK(hf.energy >= fci.energy - 1e-9);
    CHECK(hf.gamma.is_projection(1e-6));
    // At the HF minimizer the Fock operator commutes with gamma.
    auto f = dmf::fock_operator(hf.gamma, prob);
    const double comm =
        (f * hf.gamma.matrix() - hf.gamma.matrix() * f).cwiseAbs().maxCoeff();
    CHECK(comm <= 1e-5);

    auto muller = dmf::minimize_dmf(prob, 2, dmf::Functional::mueller);
    CHECK(muller.energy <= hf.energy + 1e-8);
    // Mueller occupations spread into (0, 1).
    bool interior = false;
    for (int i = 0; i < muller.gamma.occupations().size(); ++i) {
      const double lam = muller.gamma.occupations()[i];
      if (lam > 1e-4 && lam < 1.0 - 1e-4) interior = true;
    }
    CHECK(interior);
  }

  SUBCASE("interior eigenvalue pairs admit a descent direction") {
    // Eq-style probe: from an interior-eigenvalue gamma the exchange
    // perturbation |xi1><xi1| - |xi2><xi2| lowers the HF energy for one
    // sign of epsilon.
    auto prob = dmf::radial_s_channel_problem(5, 2.0);
    auto gamma = dmf::random_density_matrix(5, 2.0, 17);
    const auto& u = gamma.natural_orbitals();
    int i1 = -1, i2 = -1;
    for (int i = 0; i < 5; ++i) {
      const double lam = gamma.occupations()[i];
      if (lam > 0.05 && lam < 0.95) {
        if (i1 < 0)
          i1 = i;
        else if (i2 < 0)
          i2 = i;
      }
    }
    REQUIRE(i1 >= 0);
    REQUIRE(i2 >= 0);
    Eigen::MatrixXcd delta =
        u.col(i1) * u.col(i1).adjoint() - u.col(i2) * u.col(i2).adjoint();
    const double e0 = dmf::hf_energy(gamma, prob);
    bool lowered = false;
    for (double eps : {0.02, -0.02}) {
      DensityMatrix trial(gamma.matrix() + eps * delta);
      if (dmf::hf_energy(trial, prob) < e0 - 1e-12) lowered = true;
    }
    CHECK(lowered);
  }

  SUBCASE("FCI one-matrix is feasible and not below FCI in HF energy") {
    auto prob = dmf::radial_s_channel_problem(5, 2.0);
    auto fci = fock::ground_state(prob.spec, 2);
    DensityMatrix gamma(fock::reduced_density_matrix(fci.psi, 1));
    CHECK(gamma.trace() == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(dmf::hf_energy(gamma, prob) >= fci.energy - 1e-9);
  }

  SUBCASE("argument validation") {
    auto prob = dmf::random_problem(4, 111, true);
    CHECK_THROWS_AS(dmf::minimize_dmf(prob, 9, dmf::Functional::hf),
                    std::invalid_argument);
  }
}
