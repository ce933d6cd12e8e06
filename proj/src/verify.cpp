#include "dftatoms/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>

#include "dftatoms/appendix.hpp"
#include "dftatoms/bathtub.hpp"
#include "dftatoms/constants.hpp"
#include "dftatoms/dmf.hpp"
#include "dftatoms/engel_dreizler.hpp"
#include "dftatoms/fockspace.hpp"
#include "dftatoms/hartree.hpp"
#include "dftatoms/hellmann.hpp"
#include "dftatoms/macke.hpp"
#include "dftatoms/phasespace.hpp"
#include "dftatoms/thomasfermi.hpp"
#include "dftatoms/tfw.hpp"

namespace dfta::verify {

RadialDensity random_radial_density(const RadialGrid& grid, Rng& rng,
                                    double mass_scale) {
  const auto& r = grid.nodes();
  std::vector<double> values(grid.size(), 0.0);
  const int bumps = 2 + static_cast<int>(rng.integer(3));
  for (int b = 0; b < bumps; ++b) {
    const double amp = rng.uniform(0.1, 1.0);
    if (rng.uniform() < 0.5) {
      const double decay = rng.uniform(0.5, 4.0);
      for (std::size_t i = 0; i < r.size(); ++i)
        values[i] += amp * std::exp(-decay * r[i]);
    } else {
      const double center = rng.uniform(0.2, 4.0);
      const double width = rng.uniform(0.2, 1.5);
      for (std::size_t i = 0; i < r.size(); ++i) {
        const double u = (r[i] - center) / width;
        values[i] += amp * std::exp(-0.5 * u * u);
      }
    }
  }
  RadialDensity raw(grid, values);
  const double target = mass_scale * rng.uniform(0.3, 1.5);
  const double scale = target / raw.mass();
  for (auto& v : values) v *= scale;
  return RadialDensity(grid, std::move(values));
}

std::vector<double> random_signed_profile(const RadialGrid& grid, Rng& rng) {
  const auto& r = grid.nodes();
  std::vector<double> values(grid.size(), 0.0);
  const int bumps = 2 + static_cast<int>(rng.integer(3));
  for (int b = 0; b < bumps; ++b) {
    const double amp = rng.uniform(-1.0, 1.0);
    const double center = rng.uniform(0.1, 5.0);
    const double width = rng.uniform(0.2, 1.5);
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double u = (r[i] - center) / width;
      values[i] += amp * std::exp(-0.5 * u * u);
    }
  }
  return values;
}

namespace {

CheckResult pass_if_below(double measured, double tolerance,
                          double expected = 0.0) {
  CheckResult res{measured, expected, tolerance,
                  measured <= tolerance ? Status::pass : Status::fail};
  return res;
}

CheckResult pass_if_at_least(double measured, double bound) {
  CheckResult res{measured, bound, 0.0,
                  measured >= bound ? Status::pass : Status::fail};
  return res;
}

CheckResult observe(double measured, double expected = 0.0) {
  return {measured, expected, 0.0, Status::observational};
}

// ---- numerics ------------------------------------------------------------

CheckResult check_integrate_linear(std::uint64_t seed) {
  Rng rng(seed);
  auto grid = RadialGrid::logarithmic(300, 1e-4, 20.0);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> f(grid.size()), g(grid.size());
    for (auto& v : f) v = rng.normal();
    for (auto& v : g) v = rng.normal();
    const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
    std::vector<double> combo(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      combo[i] = a * f[i] + b * g[i];
    const double lhs = integrate_radial(grid, combo);
    const double rhs =
        a * integrate_radial(grid, f) + b * integrate_radial(grid, g);
    worst = std::max(worst, std::abs(lhs - rhs) /
                                (1.0 + std::abs(lhs) + std::abs(rhs)));
  }
  return pass_if_below(worst, 1e-13);
}

CheckResult check_onsager(std::uint64_t seed) {
  Rng rng(seed);
  auto grid = RadialGrid::make_default();
  double worst = 1e300;
  for (int rep = 0; rep < 100; ++rep) {
    auto profile = random_signed_profile(grid, rng);
    ChargeDistribution a(grid, profile);
    worst = std::min(worst, coulomb_inner(a, a));
  }
  return pass_if_at_least(worst, 0.0);
}

CheckResult check_newton(std::uint64_t seed) {
  Rng rng(seed);
  auto grid = RadialGrid::make_default();
  const auto& r = grid.nodes();
  double worst = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    // Density supported inside [0, 3].
    std::vector<double> values(grid.size(), 0.0);
    const double center = rng.uniform(0.5, 1.5), width = rng.uniform(0.1, 0.4);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double u = (r[i] - center) / width;
      values[i] = std::exp(-0.5 * u * u);
      if (r[i] > 3.0) values[i] = 0.0;
    }
    RadialDensity rho(grid, values);
    auto v = hartree_potential(rho);
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (r[i] > 4.0)
        worst = std::max(worst,
                         std::abs(v[i] - rho.mass() / r[i]) /
                             (rho.mass() / r[i]));
  }
  return pass_if_below(worst, 1e-8);
}

CheckResult check_bathtub_exhaustive(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t cells = 2 + rng.integer(5);
    std::vector<double> levels(cells), measures(cells);
    for (auto& l : levels) l = (1.0 + rng.integer(8)) / 4.0;
    for (auto& m : measures) m = (1.0 + rng.integer(4)) / 2.0;
    double capacity = 0.0;
    const double cap = (1.0 + rng.integer(4)) / 2.0;
    for (double m : measures) capacity += cap * m;
    const double total = rng.uniform(0.0, capacity);
    auto fill = bathtub_fill(levels, measures, cap, total);
    double value = 0.0, mass = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
      value += levels[i] * fill.occupations[i] * measures[i];
      mass += fill.occupations[i] * measures[i];
    }
    // Exhaustive optimum: cap a subset fully, one marginal cell partial.
    double best = 1e300;
    for (std::size_t subset = 0; subset < (1u << cells); ++subset) {
      double sub_mass = 0.0, sub_value = 0.0;
      for (std::size_t i = 0; i < cells; ++i)
        if (subset & (1u << i)) {
          sub_mass += cap * measures[i];
          sub_value += levels[i] * cap * measures[i];
        }
      if (sub_mass > total + 1e-12) continue;
      const double rem = total - sub_mass;
      if (rem < 1e-12) {
        best = std::min(best, sub_value);
        continue;
      }
      for (std::size_t j = 0; j < cells; ++j) {
        if (subset & (1u << j)) continue;
        if (rem <= cap * measures[j] + 1e-12)
          best = std::min(best, sub_value + levels[j] * rem);
      }
    }
    worst = std::max(worst, std::abs(value - best));
    worst = std::max(worst, std::abs(mass - total));
  }
  return pass_if_below(worst, 1e-9);
}

// ---- fockspace -----------------------------------------------------------

CheckResult check_car(std::uint64_t) {
  const int modes = 6;
  const std::size_t dim = 1u << modes;
  double worst = 0.0;
  std::vector<Eigen::MatrixXcd> a(modes), ad(modes);
  for (int m = 0; m < modes; ++m) {
    a[m] = fock::annihilate_matrix(modes, m);
    ad[m] = fock::create_matrix(modes, m);
  }
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  for (int m = 0; m < modes; ++m)
    for (int n = 0; n < modes; ++n) {
      worst = std::max(worst,
                       (a[m] * a[n] + a[n] * a[m]).cwiseAbs().maxCoeff());
      worst = std::max(worst,
                       (ad[m] * ad[n] + ad[n] * ad[m]).cwiseAbs().maxCoeff());
      Eigen::MatrixXcd anti = ad[m] * a[n] + a[n] * ad[m];
      if (m == n) anti -= id;
      worst = std::max(worst, anti.cwiseAbs().maxCoeff());
    }
  return pass_if_below(worst, 1e-12);
}

CheckResult check_number_commute(std::uint64_t seed) {
  auto prob = dmf::random_problem(5, seed + 11, false);
  auto h = fock::assemble_hamiltonian(prob.spec);
  const int modes = 5;
  const std::size_t dim = 1u << modes;
  Eigen::MatrixXcd number = Eigen::MatrixXcd::Zero(dim, dim);
  for (int m = 0; m < modes; ++m)
    number += fock::create_matrix(modes, m) * fock::annihilate_matrix(modes, m);
  const double worst = (h * number - number * h).cwiseAbs().maxCoeff();
  return pass_if_below(worst, 1e-12);
}

CheckResult check_slater_bridge(std::uint64_t seed) {
  auto prob = dmf::random_problem(5, seed + 23, true);
  // Slater determinant on modes {0, 2, 3}.
  const unsigned mask = 0b01101;
  auto psi = fock::FockVector::basis_state(5, mask);
  auto h_psi = fock::apply_hamiltonian(prob.spec, psi);
  const double fock_energy = psi.dot(h_psi).real();
  Eigen::MatrixXcd gamma = Eigen::MatrixXcd::Zero(5, 5);
  gamma(0, 0) = gamma(2, 2) = gamma(3, 3) = 1.0;
  const double hf = dmf::hf_energy(dmf::DensityMatrix(gamma), prob);
  return pass_if_below(std::abs(fock_energy - hf), 1e-10);
}

CheckResult check_rdm_bounds(std::uint64_t seed) {
  Rng rng(seed + 31);
  const int modes = 6;
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 1 + static_cast<int>(rng.integer(modes));
    auto masks = fock::sector_masks(modes, n);
    fock::FockVector psi(modes);
    for (unsigned mask : masks)
      psi.amplitudes()[mask] = fock::Complex(rng.normal(), rng.normal());
    psi.amplitudes() /= psi.norm();
    auto gamma = fock::reduced_density_matrix(psi, 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gamma);
    worst = std::max(worst, std::abs(gamma.trace().real() - n));
    worst = std::max(worst, std::max(0.0, -es.eigenvalues().minCoeff()));
    worst = std::max(worst, std::max(0.0, es.eigenvalues().maxCoeff() - 1.0));
  }
  return pass_if_below(worst, 1e-12);
}

// ---- thomasfermi -----------------------------------------------------------

CheckResult check_tf_neutral_mass(std::uint64_t) {
  auto sol = tf::solve_tf_neutral(1.0);
  return pass_if_below(std::abs(sol.rho.mass() - 1.0), 1e-4);
}

CheckResult check_tf_scaling(std::uint64_t) {
  const double e1 = tf::solve_tf_neutral(1.0).energy;
  double worst = 0.0;
  for (double z : {10.0, 100.0}) {
    const double ez = tf::solve_tf_neutral(z).energy;
    worst = std::max(worst, std::abs(ez / std::pow(z, 7.0 / 3.0) - e1));
  }
  return pass_if_below(worst, 1e-3);
}

CheckResult check_tf_shape(std::uint64_t) {
  auto sol = tf::solve_tf_neutral(4.0);
  const auto& rho = sol.rho.values();
  const auto& r = sol.rho.grid().nodes();
  double worst = 0.0;
  const double scale = rho.front();
  for (double phi : sol.phi) worst = std::max(worst, -phi);
  for (std::size_t i = 0; i + 1 < rho.size(); ++i)
    worst = std::max(worst, (rho[i + 1] - rho[i]) / scale);
  for (std::size_t i = 1; i + 1 < rho.size(); ++i) {
    const double t = (r[i] - r[i - 1]) / (r[i + 1] - r[i - 1]);
    const double chord = (1.0 - t) * rho[i - 1] + t * rho[i + 1];
    worst = std::max(worst, (rho[i] - chord) / scale);
  }
  return pass_if_below(worst, 1e-8);
}

CheckResult check_tf_lower_bound(std::uint64_t seed) {
  Rng rng(seed + 41);
  auto grid = RadialGrid::make_default();
  const double coeff = tf_lower_bound_coefficient();
  double worst = 1e300;
  for (double z : {1.0, 4.0, 16.0}) {
    const double bound = -coeff * std::pow(z, 7.0 / 3.0);
    for (int rep = 0; rep < 200; ++rep) {
      auto rho = random_radial_density(grid, rng, 1.5 * z);
      worst = std::min(worst, tf::tf_energy(rho, z) - bound);
    }
  }
  return pass_if_at_least(worst, 0.0);
}

CheckResult check_tf_convexity(std::uint64_t seed) {
  Rng rng(seed + 43);
  auto grid = RadialGrid::make_default();
  double worst = 1e300;
  for (int rep = 0; rep < 40; ++rep) {
    auto rho = random_radial_density(grid, rng, 2.0);
    auto tau = random_radial_density(grid, rng, 2.0);
    std::vector<double> mid(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      mid[i] = 0.5 * (rho.values()[i] + tau.values()[i]);
    const double lhs = tf::tf_energy(RadialDensity(grid, mid), 2.0);
    const double rhs = 0.5 * (tf::tf_energy(rho, 2.0) +
                              tf::tf_energy(tau, 2.0));
    worst = std::min(worst, rhs - lhs);
  }
  return pass_if_at_least(worst, -1e-10);
}

CheckResult check_tf_uniqueness(std::uint64_t) {
  auto grid = tf::tf_solver_grid(2.0);
  auto a = tf::solve_tf_neutral(2.0, grid);
  // Tighter initial bracket (different path to the same slope).
  tf::TfConstants c;
  auto b = tf::solve_tf_constrained(2.0, 2.0, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double scale = a.rho.values().front();
    worst = std::max(worst, std::abs(a.rho.values()[i] - b.rho.values()[i]) /
                                scale);
  }
  return pass_if_below(worst, 1e-6);
}

CheckResult check_tf_constrained_convex(std::uint64_t) {
  const double z = 2.0;
  std::vector<double> masses{0.4, 0.8, 1.2, 1.6, 2.0};
  std::vector<double> energies;
  auto grid = tf::tf_solver_grid(z);
  for (double n : masses)
    energies.push_back(tf::solve_tf_constrained(z, n, grid).energy);
  double worst = 1e300;
  for (std::size_t i = 0; i + 1 < masses.size(); ++i)
    worst = std::min(worst, energies[i] - energies[i + 1]);  // decreasing
  double convexity = 1e300;
  for (std::size_t i = 1; i + 1 < masses.size(); ++i)
    convexity = std::min(convexity, energies[i + 1] - 2.0 * energies[i] +
                                        energies[i - 1]);
  CheckResult res = pass_if_at_least(std::min(worst, convexity + 1e-8), 0.0);
  res.measured = convexity;
  return res;
}

CheckResult check_lieb_thirring(std::uint64_t) {
  // Slater-determinant densities from the radial Macke construction:
  // kinetic energy against (3/5) gamma int rho^(5/3), 3D density.
  auto grid = RadialGrid::logarithmic(6000, 1e-5, 35.0);
  const auto& r = grid.nodes();
  double min_ratio = 1e300;
  for (int count : {1, 2, 4}) {
    std::vector<double> rho_l(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      rho_l[i] = 4.0 * r[i] * r[i] * std::exp(-2.0 * r[i]);
    RadialDensity raw(RadialGrid(grid), std::vector<double>(grid.size(), 0.0));
    const double mass = integrate_radial(grid, rho_l);
    for (auto& v : rho_l) v *= count / mass;
    tfw::ChannelDensities channels(grid, {rho_l});
    auto set = macke::radial_macke(channels, {{0, 0, 0, count}}, {0.5 * (count + 1)});
    const double kinetic = set.block_kinetic(set.blocks()[0]);
    // 3D density of the s-channel: rho_3d = rho_l / (4 pi r^2).
    std::vector<double> integrand(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double rho3 = rho_l[i] / (4.0 * pi * r[i] * r[i]);
      integrand[i] = 4.0 * pi * r[i] * r[i] * std::pow(rho3, 5.0 / 3.0);
    }
    const double tf_term = 0.6 * gamma_tf() * integrate_radial(grid, integrand);
    min_ratio = std::min(min_ratio, kinetic / tf_term);
  }
  // Open conjecture: report the ratio against the classical constant.
  CheckResult res = observe(min_ratio, 1.0);
  // Assert only the inequality with a conservative published factor.
  if (min_ratio < 0.6) res.status = Status::fail;
  return res;
}

// ---- tfw -------------------------------------------------------------------

CheckResult check_tfw_flow_monotone(std::uint64_t) {
  auto sol = tfw::minimize_tfw(1.0, 1.0, 0.2);
  return pass_if_below(sol.max_accepted_increase,
                       1e-12 * (1.0 + std::abs(sol.energy)));
}

CheckResult check_tfw_weizsacker_convex(std::uint64_t seed) {
  Rng rng(seed + 53);
  auto grid = RadialGrid::make_default();
  double worst = 1e300;
  for (int rep = 0; rep < 100; ++rep) {
    auto rho = random_radial_density(grid, rng, 2.0);
    auto tau = random_radial_density(grid, rng, 2.0);
    std::vector<double> mid(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      mid[i] = 0.5 * (rho.values()[i] + tau.values()[i]);
    const double lhs =
        tfw::weizsaecker_term(RadialDensity(grid, mid), 1.0);
    const double rhs = 0.5 * (tfw::weizsaecker_term(rho, 1.0) +
                              tfw::weizsaecker_term(tau, 1.0));
    worst = std::min(worst, rhs - lhs);
  }
  return pass_if_at_least(worst, -1e-10);
}

CheckResult check_tfw_negative_ion(std::uint64_t) {
  double excess = 1e300;
  for (double z : {1.0, 2.0}) {
    auto sol = tfw::minimize_tfw(z, z + 0.05, 0.2);
    if (!sol.bound) return pass_if_at_least(-1.0, 0.0);
    excess = std::min(excess, sol.rho.mass() - z);
  }
  return pass_if_at_least(excess, 0.049);
}

CheckResult check_tfw_benguria(std::uint64_t) {
  auto bracket = tfw::critical_charge(1.0, 0.2);
  CheckResult res = pass_if_below(bracket.n_upper, 2.0 - 1e-9);
  res.expected = 2.0;
  if (bracket.n_lower <= 1.0) res.status = Status::fail;
  return res;
}

CheckResult check_tfw_euler(std::uint64_t seed) {
  Rng rng(seed + 59);
  tfw::TfwOptions opt;
  auto sol = tfw::minimize_tfw(1.0, 1.0, 0.2, opt);
  // First-order optimality: admissible perturbations never lower the
  // energy beyond roundoff.
  const auto& grid = sol.rho.grid();
  double drop = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<double> psi(sol.psi);
    for (std::size_t i = 0; i < psi.size(); ++i)
      psi[i] *= 1.0 + 1e-4 * rng.normal();
    std::vector<double> rho(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) rho[i] = psi[i] * psi[i];
    RadialDensity trial_raw(grid, rho);
    const double scale = sol.rho.mass() / trial_raw.mass();
    for (auto& v : rho) v *= scale;
    const double trial = tfw::tfw_energy(RadialDensity(grid, rho), 1.0, 0.2);
    drop = std::max(drop, sol.energy - trial);
  }
  CheckResult res = pass_if_below(std::max(drop, sol.euler_residual), 1e-6);
  res.measured = drop;
  return res;
}

CheckResult check_tfw_tf_limit(std::uint64_t) {
  tfw::TfwOptions opt;
  opt.tol = 1e-7;
  auto sol = tfw::minimize_tfw(1.0, 1.0, 1e-3, opt);
  const double e_tf = tf::solve_tf_constrained(1.0, 1.0).energy;
  return pass_if_below(std::abs(sol.energy - e_tf) / std::abs(e_tf), 2e-2);
}

CheckResult check_hw_terms(std::uint64_t) {
  auto grid = RadialGrid::logarithmic(4000, 1e-5, 35.0);
  const auto& r = grid.nodes();
  std::vector<double> rho(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    rho[i] = 4.0 * r[i] * r[i] * std::exp(-2.0 * r[i]);
  tfw::ChannelDensities channels(grid, {rho});
  auto terms = tfw::hw_energy_terms(channels, 1.0);
  // Analytic values for rho_0 = 4 r^2 e^(-2r): gradient 1/2, external -1,
  // cubic (pi^2/24) 64 6!/6^7, hartree 5/16.
  const double cubic = (pi * pi / 24.0) * 64.0 * 720.0 / 279936.0;
  double worst = std::abs(terms.gradient - 0.5);
  worst = std::max(worst, std::abs(terms.external + 1.0));
  worst = std::max(worst, std::abs(terms.centrifugal));
  worst = std::max(worst, std::abs(terms.cubic - cubic));
  worst = std::max(worst, std::abs(terms.hartree - 5.0 / 16.0));
  return pass_if_below(worst, 1e-8);
}

// ---- constraint search -----------------------------------------------------

CheckResult check_macke_density(std::uint64_t seed) {
  Rng rng(seed + 61);
  double worst = 0.0;
  // 1D
  auto grid = macke::LineGrid::uniform(8193, -8.0, 8.0);
  for (int n : {1, 3}) {
    std::vector<double> rho(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double x = grid.nodes[i];
      rho[i] = std::exp(-0.5 * x * x) + 0.4 * std::exp(-0.7 * (x - 1.0) * (x - 1.0));
    }
    const double mass = grid.integrate(rho);
    for (auto& v : rho) v *= n / mass;
    auto set = macke::macke_orbitals_1d(grid, rho, 0.3 + 0.1 * n);
    auto reproduced = set.density();
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (rho[i] > 1e-12)
        worst = std::max(worst,
                         std::abs(reproduced[i] - rho[i]) / rho[i]);
  }
  (void)rng;
  return pass_if_below(worst, 1e-10);
}

CheckResult check_macke_gram(std::uint64_t) {
  double worst = 0.0;
  {
    auto grid = macke::LineGrid::uniform(16385, -8.0, 8.0);
    std::vector<double> rho(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double x = grid.nodes[i];
      rho[i] = std::exp(-0.5 * x * x);
    }
    const double mass = grid.integrate(rho);
    for (auto& v : rho) v *= 3.0 / mass;
    auto gram = macke::macke_orbitals_1d(grid, rho, 0.25).gram();
    worst = std::max(worst,
                     (gram - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff());
  }
  {
    // Radial channel block.
    auto grid = RadialGrid::logarithmic(12000, 1e-5, 35.0);
    const auto& r = grid.nodes();
    std::vector<double> rho(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      rho[i] = 4.0 * r[i] * r[i] * std::exp(-2.0 * r[i]);
    const double mass = integrate_radial(grid, rho);
    for (auto& v : rho) v *= 2.0 / mass;
    tfw::ChannelDensities channels(grid, {rho});
    auto set = macke::radial_macke(channels, {{0, 0, 0, 2}}, {1.5});
    auto gram = set.block_gram(set.blocks()[0]);
    worst = std::max(worst,
                     (gram - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff());
  }
  return pass_if_below(worst, 1e-10);
}

CheckResult check_macke_kinetic(std::uint64_t seed) {
  Rng rng(seed + 67);
  auto grid = macke::LineGrid::uniform(8193, -9.0, 9.0);
  double worst = 0.0;
  for (int n : {1, 2, 3, 5}) {
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<double> rho(grid.size(), 0.0);
      const int bumps = 2 + static_cast<int>(rng.integer(2));
      for (int b = 0; b < bumps; ++b) {
        const double c = rng.uniform(-2.0, 2.0), w = rng.uniform(0.9, 2.0);
        const double amp = rng.uniform(0.3, 1.0);
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const double u = (grid.nodes[i] - c) / w;
          rho[i] += amp * std::exp(-0.5 * u * u);
        }
      }
      const double mass = grid.integrate(rho);
      for (auto& v : rho) v *= n / mass;
      auto [a, direct] = macke::optimal_phase_1d(grid, rho);
      const double bound = macke::kinetic_upper_bound_1d(grid, rho, n);
      worst = std::max(worst, std::abs(direct - bound) / (1.0 + bound));
    }
  }
  return pass_if_below(worst, 1e-6);
}

CheckResult check_macke_dd(std::uint64_t) {
  auto gx = macke::LineGrid::uniform(1537, -10.5, 10.5);
  auto gy = macke::LineGrid::uniform(1537, -10.5, 10.5);
  macke::TensorGrid2d grid{gx, gy};
  std::vector<double> rho(grid.size());
  for (std::size_t j = 0; j < gy.size(); ++j)
    for (std::size_t i = 0; i < gx.size(); ++i) {
      const double x = gx.nodes[i], y = gy.nodes[j];
      rho[j * gx.size() + i] =
          std::exp(-0.5 * (x * x + y * y) / (1.4 * 1.4));
    }
  double mass = 0.0;
  {
    std::vector<double> row(gx.size());
    std::vector<double> rowmass(gy.size());
    for (std::size_t j = 0; j < gy.size(); ++j) {
      for (std::size_t i = 0; i < gx.size(); ++i) row[i] = rho[j * gx.size() + i];
      rowmass[j] = gx.integrate(row);
    }
    mass = gy.integrate(rowmass);
  }
  for (auto& v : rho) v *= 4.0 / mass;
  std::vector<std::array<int, 2>> indices{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  auto set = macke::macke_orbitals_2d(grid, rho, indices, {0.3, 0.7});
  double worst = (set.gram() - Eigen::MatrixXcd::Identity(4, 4))
                     .cwiseAbs()
                     .maxCoeff();
  // det J = rho/N pointwise.
  auto det = set.det_jacobian();
  const double peak = *std::max_element(rho.begin(), rho.end());
  for (std::size_t k = 0; k < rho.size(); ++k)
    if (rho[k] > 1e-6 * peak)
      worst = std::max(worst, std::abs(det[k] - rho[k] / 4.0) / (rho[k] / 4.0));
  return pass_if_below(worst, 1e-8);
}

CheckResult check_macke_dd_kinetic_report(std::uint64_t) {
  // d >= 2 reproduces only the Weizsaecker part; report the remainder.
  auto gx = macke::LineGrid::uniform(769, -9.0, 9.0);
  macke::TensorGrid2d grid{gx, gx};
  std::vector<double> rho(grid.size());
  for (std::size_t j = 0; j < gx.size(); ++j)
    for (std::size_t i = 0; i < gx.size(); ++i) {
      const double x = gx.nodes[i], y = gx.nodes[j];
      rho[j * gx.size() + i] = std::exp(-0.5 * (x * x + y * y));
    }
  std::vector<double> row(gx.size());
  std::vector<double> rowmass(gx.size());
  for (std::size_t j = 0; j < gx.size(); ++j) {
    for (std::size_t i = 0; i < gx.size(); ++i) row[i] = rho[j * gx.size() + i];
    rowmass[j] = gx.integrate(row);
  }
  double mass = gx.integrate(rowmass);
  for (auto& v : rho) v *= 2.0 / mass;
  std::vector<std::array<int, 2>> indices{{0, 0}, {1, 0}};
  auto set = macke::macke_orbitals_2d(grid, rho, indices, {0.5, 0.0});
  // Direct kinetic by finite differences on the two orbitals.
  double kinetic = 0.0;
  const std::size_t n = gx.size();
  for (int k = 0; k < 2; ++k) {
    std::vector<double> re(n * n), im(n * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        const auto v = set.value(k, i, j);
        re[j * n + i] = v.real();
        im[j * n + i] = v.imag();
      }
    std::vector<double> slice(n), d(n);
    std::vector<double> grad2(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {  // d/dx
      for (std::size_t i = 0; i < n; ++i) slice[i] = re[j * n + i];
      d = gx.derivative(slice);
      for (std::size_t i = 0; i < n; ++i) grad2[j * n + i] += d[i] * d[i];
      for (std::size_t i = 0; i < n; ++i) slice[i] = im[j * n + i];
      d = gx.derivative(slice);
      for (std::size_t i = 0; i < n; ++i) grad2[j * n + i] += d[i] * d[i];
    }
    for (std::size_t i = 0; i < n; ++i) {  // d/dy
      for (std::size_t j = 0; j < n; ++j) slice[j] = re[j * n + i];
      d = gx.derivative(slice);
      for (std::size_t j = 0; j < n; ++j) grad2[j * n + i] += d[j] * d[j];
      for (std::size_t j = 0; j < n; ++j) slice[j] = im[j * n + i];
      d = gx.derivative(slice);
      for (std::size_t j = 0; j < n; ++j) grad2[j * n + i] += d[j] * d[j];
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) slice[i] = grad2[j * n + i];
      rowmass[j] = gx.integrate(slice);
    }
    kinetic += 0.5 * gx.integrate(rowmass);
  }
  // Weizsaecker part of the same density.
  std::vector<double> sq(n * n);
  for (std::size_t k = 0; k < sq.size(); ++k) sq[k] = std::sqrt(rho[k]);
  std::vector<double> gradw(n * n, 0.0), slice(n), d(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) slice[i] = sq[j * n + i];
    d = gx.derivative(slice);
    for (std::size_t i = 0; i < n; ++i) gradw[j * n + i] += d[i] * d[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) slice[j] = sq[j * n + i];
    d = gx.derivative(slice);
    for (std::size_t j = 0; j < n; ++j) gradw[j * n + i] += d[j] * d[j];
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) slice[i] = gradw[j * n + i];
    rowmass[j] = gx.integrate(slice);
  }
  const double weizsaecker = 0.5 * gx.integrate(rowmass);
  return observe(kinetic - weizsaecker, 0.0);
}

// ---- dmf -------------------------------------------------------------------

CheckResult check_dmf_exchange_direct(std::uint64_t seed) {
  auto prob = dmf::random_problem(6, seed + 71, true);
  double worst = 1e300;
  for (int rep = 0; rep < 1000; ++rep) {
    auto gamma = dmf::random_density_matrix(6, 3.0, seed + 1000 + rep);
    const double direct = prob.direct_energy(gamma.matrix());
    const double exchange = prob.exchange_energy(gamma.matrix());
    worst = std::min(worst, direct - exchange);
  }
  return pass_if_at_least(worst, -1e-10);
}

CheckResult check_dmf_lieb(std::uint64_t seed) {
  double worst = 0.0;
  for (int instance = 0; instance < 2; ++instance) {
    dmf::TwoBodyProblem prob =
        instance == 0 ? dmf::radial_s_channel_problem(6, 2.0)
                      : dmf::random_problem(6, seed + 73, true);
    dmf::MinimizeOptions opt;
    opt.seed = seed + instance;
    auto res = dmf::minimize_dmf(prob, 2, dmf::Functional::hf, opt);
    for (int i = 0; i < res.gamma.occupations().size(); ++i) {
      const double lam = res.gamma.occupations()[i];
      worst = std::max(worst, std::min(lam, 1.0 - lam));
    }
  }
  return pass_if_below(worst, 1e-6);
}

CheckResult check_dmf_hf_ge_fci(std::uint64_t seed) {
  double worst = 1e300;
  for (int instance = 0; instance < 2; ++instance) {
    dmf::TwoBodyProblem prob =
        instance == 0 ? dmf::radial_s_channel_problem(6, 2.0)
                      : dmf::random_problem(5, seed + 79, true);
    const int n = 2;
    dmf::MinimizeOptions opt;
    opt.seed = seed + 7 * instance;
    auto hf = dmf::minimize_dmf(prob, n, dmf::Functional::hf, opt);
    auto fci = fock::ground_state(prob.spec, n);
    worst = std::min(worst, hf.energy - fci.energy);
  }
  return pass_if_at_least(worst, -1e-9);
}

CheckResult check_dmf_muller_le_hf(std::uint64_t seed) {
  auto prob = dmf::random_problem(5, seed + 83, true);
  double worst = 1e300, proj_dev = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    auto gamma = dmf::random_density_matrix(5, 2.0, seed + 2000 + rep);
    const double gap = dmf::hf_energy(gamma, prob) -
                       dmf::muller_energy(gamma, prob);
    worst = std::min(worst, gap);
  }
  // Equality on projections.
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(5, 5);
  p(0, 0) = p(3, 3) = 1.0;
  dmf::DensityMatrix proj(p);
  proj_dev = std::abs(dmf::hf_energy(proj, prob) -
                      dmf::muller_energy(proj, prob));
  CheckResult res = pass_if_at_least(worst, -1e-10);
  if (proj_dev > 1e-10) res.status = Status::fail;
  return res;
}

CheckResult check_dmf_fci_bridge(std::uint64_t seed) {
  auto prob = dmf::radial_s_channel_problem(5, 2.0);
  auto fci = fock::ground_state(prob.spec, 2);
  auto gamma_fci = fock::reduced_density_matrix(fci.psi, 1);
  dmf::DensityMatrix gamma(gamma_fci);
  const double slack = dmf::hf_energy(gamma, prob) - fci.energy;
  (void)seed;
  return pass_if_at_least(slack, -1e-9);
}

CheckResult check_dmf_muller_conjecture(std::uint64_t seed) {
  // Open conjecture (proved only for N = 2): Mueller minimum below the
  // exact ground-state energy; reported, not asserted.
  auto prob = dmf::radial_s_channel_problem(5, 2.0);
  dmf::MinimizeOptions opt;
  opt.seed = seed;
  auto muller = dmf::minimize_dmf(prob, 2, dmf::Functional::mueller, opt);
  auto fci = fock::ground_state(prob.spec, 2);
  return observe(fci.energy - muller.energy, 0.0);
}

// ---- engel-dreizler ----------------------------------------------------------

CheckResult check_ed_smallt(std::uint64_t) {
  const double t = 1e-3;
  auto k = ed::ed_kernels(t);
  double worst = std::abs(k.ttf / std::pow(t, 5) - 0.8) / 0.8;
  worst = std::max(worst, std::abs(k.x / std::pow(t, 4) - 2.0) / 2.0);
  return pass_if_below(worst, 1e-5);
}

CheckResult check_ed_kernel_nonneg(std::uint64_t) {
  double worst = 1e300;
  for (int i = 0; i <= 100000; ++i) {
    const double t = 1e3 * i / 100000.0;
    auto k = ed::ed_kernels(t);
    worst = std::min(worst, std::min(k.f2, k.ttf));
  }
  return pass_if_at_least(worst, 0.0);
}

CheckResult check_ed_exchange_nonneg(std::uint64_t) {
  double worst = 1e300;
  for (int i = 0; i <= 100000; ++i) {
    const double t = 1e3 * i / 100000.0;
    worst = std::min(worst, ed::ed_kernels(t).x);
  }
  return observe(worst, 0.0);
}

RadialDensity gaussian_density(const RadialGrid& grid, double mass,
                               double width) {
  const auto& r = grid.nodes();
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    values[i] = std::exp(-0.5 * (r[i] / width) * (r[i] / width));
  RadialDensity raw(grid, values);
  const double s = mass / raw.mass();
  for (auto& v : values) v *= s;
  return RadialDensity(grid, std::move(values));
}

CheckResult check_ed_nonrel_limit(std::uint64_t) {
  auto grid = RadialGrid::make_default();
  auto rho = gaussian_density(grid, 6.0, 1.0);
  ed::EdParams params;
  params.c = 1e6;
  params.z = 6.0;
  params.lambda = 0.2;
  auto terms = ed::ed_energy_terms(rho, params);
  const double tf_ref = tf::tf_kinetic(rho);
  const auto& r = grid.nodes();
  std::vector<double> dirac(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    dirac[i] = 4.0 * pi * r[i] * r[i] *
               std::pow(rho.values()[i], 4.0 / 3.0);
  const double dirac_ref = 0.75 * std::cbrt(3.0 / pi) *
                           integrate_radial(grid, dirac);
  const double weiz_ref = tfw::weizsaecker_term(rho, params.lambda);
  double worst = std::abs(terms.kinetic - tf_ref) / tf_ref;
  worst = std::max(worst, std::abs(terms.exchange - dirac_ref) / dirac_ref);
  CheckResult res = pass_if_below(worst, 1e-4);
  // T^W / Weizsaecker -> 1 within 1%.
  if (std::abs(terms.weizsaecker / weiz_ref - 1.0) > 1e-2)
    res.status = Status::fail;
  return res;
}

CheckResult check_ed_bounded_scan(std::uint64_t) {
  auto grid = RadialGrid::logarithmic(2000, 1e-8, 60.0);
  ed::EdParams params;
  params.z = 50.0;
  params.lambda = 1.0 / 9.0;
  double min_energy = 1e300;
  for (int k = 0; k <= 32; ++k) {
    const double scale = std::pow(10.0, 4.0 * k / 32.0);
    auto rho = gaussian_density(grid, 50.0, 1.0 / scale);
    min_energy = std::min(min_energy, ed::ed_energy(rho, params));
  }
  return observe(min_energy, 0.0);
}

CheckResult check_ed_z_monotone(std::uint64_t) {
  auto grid = RadialGrid::make_default();
  auto rho = gaussian_density(grid, 4.0, 1.0);
  ed::EdParams hi, lo;
  hi.z = 8.0;
  lo.z = 4.0;
  const double gap = ed::ed_energy(rho, lo) - ed::ed_energy(rho, hi);
  return pass_if_at_least(gap, 0.0);
}

// ---- phasespace ----------------------------------------------------------------

CheckResult check_ps_marginal(std::uint64_t seed) {
  Rng rng(seed + 89);
  auto grid = RadialGrid::logarithmic(400, 1e-3, 30.0);
  auto momentum = RadialGrid::uniform(400, 8.0);
  double worst = 0.0;
  for (int rep = 0; rep < 3; ++rep) {
    auto rho = random_radial_density(grid, rng, 2.0);
    auto f = ps::minimize_momentum_slices(rho, momentum);
    auto marginal = f.position_marginal();
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (rho.values()[i] > 1e-12)
        worst = std::max(worst, std::abs(marginal.values()[i] -
                                         rho.values()[i]) /
                                    rho.values()[i]);
  }
  return pass_if_below(worst, 1e-10);
}

CheckResult check_ps_ordering(std::uint64_t seed) {
  Rng rng(seed + 97);
  auto grid = RadialGrid::logarithmic(240, 1e-3, 25.0);
  auto momentum = RadialGrid::uniform(240, 6.0);
  auto measures_cap = 2.0;
  double worst = 1e300;
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<double> f(grid.size() * momentum.size());
    for (auto& v : f) v = measures_cap * rng.uniform();
    ps::PhaseSpaceDensity psd(grid, momentum, std::move(f));
    const double e_phase = ps::phase_energy(psd, 1.0);
    const double e_tf = tf::tf_energy(psd.position_marginal(), 1.0);
    worst = std::min(worst, e_phase - e_tf);
  }
  return pass_if_at_least(worst, -1e-8);
}

CheckResult check_ps_tf_reduction(std::uint64_t) {
  const double z = 1.0;
  auto grid = RadialGrid::logarithmic(900, 2e-5, 40.0);
  auto tf_sol = tf::solve_tf_neutral(z, tf::tf_solver_grid(z));
  // Resample the TF density onto the window.
  std::vector<double> rho(grid.size());
  {
    const auto& src_r = tf_sol.rho.grid().nodes();
    const auto& src_v = tf_sol.rho.values();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double r = grid.nodes()[i];
      auto it = std::lower_bound(src_r.begin(), src_r.end(), r);
      std::size_t k = std::min<std::size_t>(
          std::max<std::ptrdiff_t>(it - src_r.begin(), 1), src_r.size() - 1);
      const double t = (r - src_r[k - 1]) / (src_r[k] - src_r[k - 1]);
      rho[i] = (1.0 - t) * src_v[k - 1] + t * src_v[k];
    }
  }
  RadialDensity density(grid, rho);
  std::vector<double> phi(grid.size());
  auto vh = hartree_potential(density);
  for (std::size_t i = 0; i < grid.size(); ++i)
    phi[i] = std::max(z / grid.nodes()[i] - vh[i], 1e-12);
  auto momentum = ps::momentum_grid_for(phi, 6000);
  auto fill = ps::minimize_momentum_slices(density, momentum);
  const double e_phase = ps::phase_energy(fill, z);
  const double e_tf = tf_sol.energy;
  return pass_if_below(std::abs(e_phase - e_tf) / std::abs(e_tf), 2e-2,
                       e_tf);
}

CheckResult check_ps_englert(std::uint64_t) {
  const double z = 1.0;
  auto grid = RadialGrid::logarithmic(900, 2e-5, 40.0);
  auto tf_sol = tf::solve_tf_neutral(z, tf::tf_solver_grid(z));
  std::vector<double> rho(grid.size());
  const auto& src_r = tf_sol.rho.grid().nodes();
  const auto& src_v = tf_sol.rho.values();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.nodes()[i];
    auto it = std::lower_bound(src_r.begin(), src_r.end(), r);
    std::size_t k = std::min<std::size_t>(
        std::max<std::ptrdiff_t>(it - src_r.begin(), 1), src_r.size() - 1);
    const double t = (r - src_r[k - 1]) / (src_r[k] - src_r[k - 1]);
    rho[i] = (1.0 - t) * src_v[k - 1] + t * src_v[k];
  }
  RadialDensity density(grid, rho);
  std::vector<double> phi(grid.size());
  auto vh = hartree_potential(density);
  for (std::size_t i = 0; i < grid.size(); ++i)
    phi[i] = std::max(z / grid.nodes()[i] - vh[i], 1e-12);
  auto momentum = ps::momentum_grid_for(phi, 6000);
  auto fill = ps::minimize_momentum_slices(density, momentum);
  ps::MomentumDensity tau(momentum, fill.momentum_marginal());
  const double e = ps::englert_energy(tau, z);
  return pass_if_below(std::abs(e - tf_sol.energy) / std::abs(tf_sol.energy),
                       2e-2, tf_sol.energy);
}

// ---- appendix ------------------------------------------------------------------

CheckResult check_appendix_eigenrelation(std::uint64_t) {
  double worst = 0.0;
  for (double alpha : {0.5, 1.0, 1.5}) {
    appendix::MaximalFunctionQuery q{alpha, 3};
    std::vector<double> constants;
    for (double x : {0.1, 1.0, 10.0})
      constants.push_back(appendix::maximal_function_power(q, x) *
                          std::pow(x, alpha));
    for (double c : constants)
      worst = std::max(worst, std::abs(c - constants[0]) / constants[0]);
  }
  return pass_if_below(worst, 1e-3);
}

CheckResult check_appendix_scaling(std::uint64_t seed) {
  Rng rng(seed + 101);
  const double base = appendix::scaled_infimum(1.0, 1.0, 1.0);
  double worst = 0.0;
  for (int rep = 0; rep < 6; ++rep) {
    const double gamma = rng.uniform(0.5, 3.0);
    const double z = rng.uniform(0.5, 10.0);
    const double lhs = appendix::scaled_infimum(gamma, z, 1.0);
    const double rhs =
        std::pow(z, 13.0 / 9.0) / std::cbrt(gamma) * base;
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  return pass_if_below(worst, 1e-3);
}

CheckResult check_appendix_monotone(std::uint64_t) {
  double worst = 1e300;
  double prev = 0.0;
  for (double coupling : {0.0, 0.5, 1.0, 2.0}) {
    const double value = appendix::scaled_infimum(1.0, 2.0, coupling);
    worst = std::min(worst, prev - value);  // nonincreasing in C
    prev = value;
  }
  double prev_gamma = -1e300;
  for (double gamma : {0.5, 1.0, 2.0}) {
    const double value = appendix::scaled_infimum(gamma, 2.0, 1.0);
    worst = std::min(worst, value - prev_gamma);  // nondecreasing in gamma
    prev_gamma = value;
  }
  return pass_if_at_least(worst, -1e-12);
}

}  // namespace

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = {
      {"numerics.integrate_linear", "artifact plumbing", check_integrate_linear},
      {"numerics.onsager_positive", "(D)", check_onsager},
      {"numerics.newton_theorem", "(vl)", check_newton},
      {"numerics.bathtub_exhaustive", "sec. 4.4.1", check_bathtub_exhaustive},
      {"fock.car", "(eq:car)", check_car},
      {"fock.number_commute", "(anzahl)", check_number_commute},
      {"fock.slater_bridge", "(os)", check_slater_bridge},
      {"fock.rdm_bounds", "sec. 2.4", check_rdm_bounds},
      {"tf.neutral_mass", "(minimierereigenschaften)", check_tf_neutral_mass},
      {"tf.scaling_energy", "(minimierereigenschaften)", check_tf_scaling},
      {"tf.shape", "(minimierereigenschaften)", check_tf_shape},
      {"tf.lower_bound", "(untereSchranke)", check_tf_lower_bound},
      {"tf.convexity", "(tfstrengkonvex)", check_tf_convexity},
      {"tf.uniqueness", "(tf)", check_tf_uniqueness},
      {"tf.constrained_convex_in_n", "sec. 4.1.1", check_tf_constrained_convex},
      {"tf.lieb_thirring", "(lt)", check_lieb_thirring},
      {"tfw.flow_monotone", "(tfw)", check_tfw_flow_monotone},
      {"tfw.weizsacker_convex", "sec. 4.2", check_tfw_weizsacker_convex},
      {"tfw.negative_ion", "sec. 4.2", check_tfw_negative_ion},
      {"tfw.benguria_2z", "(RafaelW)", check_tfw_benguria},
      {"tfw.euler_residual", "(TFWU)", check_tfw_euler},
      {"tfw.tf_limit", "(wunten)", check_tfw_tf_limit},
      {"hw.term_oracle", "(Hellmann)", check_hw_terms},
      {"macke.density_reproduction", "(eq:m1)", check_macke_density},
      {"macke.gram_identity", "(Macke)", check_macke_gram},
      {"macke.kinetic_identity_1d", "(eq:hkma)", check_macke_kinetic},
      {"macke.dd_constructors", "(Macked)", check_macke_dd},
      {"macke.dd_kinetic_report", "sec. 3", check_macke_dd_kinetic_report},
      {"dmf.exchange_le_direct", "(xld)", check_dmf_exchange_direct},
      {"dmf.lieb_variational", "(Volker)", check_dmf_lieb},
      {"dmf.hf_ge_fci", "(os)", check_dmf_hf_ge_fci},
      {"dmf.muller_le_hf", "(Muller)", check_dmf_muller_le_hf},
      {"dmf.fci_rdm_bridge", "(matrixgamma)", check_dmf_fci_bridge},
      {"dmf.muller_conjecture", "sec. 5.2", check_dmf_muller_conjecture},
      {"ed.kernel_smallt", "(TF),(X)", check_ed_smallt},
      {"ed.kernel_nonneg", "(W),(TF)", check_ed_kernel_nonneg},
      {"ed.exchange_nonneg", "(X)", check_ed_exchange_nonneg},
      {"ed.nonrel_limit", "(TFWD)", check_ed_nonrel_limit},
      {"ed.bounded_scan", "sec. 4.3", check_ed_bounded_scan},
      {"ed.z_monotone", "(TFWD)", check_ed_z_monotone},
      {"ps.marginal_consistency", "(scgtf)", check_ps_marginal},
      {"ps.ordering", "(scgtf)", check_ps_ordering},
      {"ps.tf_reduction", "sec. 4.4.1", check_ps_tf_reduction},
      {"ps.englert_tf", "(ImpFunk)", check_ps_englert},
      {"appendix.eigenrelation", "(mf)", check_appendix_eigenrelation},
      {"appendix.scaling_law", "(I)", check_appendix_scaling},
      {"appendix.monotone", "(defI)", check_appendix_monotone},
  };
  return checks;
}

bool Report::all_passed() const {
  for (const auto& rec : records)
    if (rec.status == Status::fail) return false;
  return true;
}

Report run_suite(const std::string& suite, std::uint64_t seed) {
  Report report;
  for (const auto& check : registry()) {
    if (suite != "all" && check.name.rfind(suite, 0) != 0) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult result;
    try {
      result = check.run(seed);
    } catch (const std::exception&) {
      result = CheckResult{0.0, 0.0, 0.0, Status::fail};
    }
    const auto stop = std::chrono::steady_clock::now();
    report.records.push_back(Record{
        check.name, check.paper_anchor, result.status, result.measured,
        result.expected, result.tolerance,
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
            .count()});
  }
  std::sort(report.records.begin(), report.records.end(),
            [](const Record& a, const Record& b) { return a.name < b.name; });
  return report;
}

namespace {

std::string number12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string report_json(const Report& report, bool timings) {
  std::string out = "{\"schema\":1,\"checks\":[";
  bool first = true;
  for (const auto& rec : report.records) {
    if (!first) out += ",";
    first = false;
    out += "{\"name\":\"" + rec.name + "\",\"paper_anchor\":\"" +
           rec.paper_anchor + "\",\"status\":\"";
    switch (rec.status) {
      case Status::pass: out += "pass"; break;
      case Status::fail: out += "fail"; break;
      case Status::observational: out += "observational"; break;
    }
    out += "\",\"measured\":" + number12(rec.measured) +
           ",\"expected\":" + number12(rec.expected) +
           ",\"tolerance\":" + number12(rec.tolerance);
    if (timings) out += ",\"runtime_ms\":" + std::to_string(rec.runtime_ms);
    out += "}";
  }
  out += "]}";
  return out;
}

}  // namespace dfta::verify
