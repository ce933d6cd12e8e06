#include "dftatoms/thomasfermi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dftatoms/hartree.hpp"

namespace dfta::tf {

namespace {

struct Shot {
  enum class Fate { hit_zero, turned_up, reached_end, left_support };
  Fate fate;
  std::vector<double> u;      // r * phi on the nodes (clamped at >= 0)
  double exit_slope = 0.0;    // u' where the trajectory left the support
  double exit_radius = 0.0;
};

// Integrate u'' = (4 pi / gamma^(3/2)) ((u - mu r)_+)^(3/2) / sqrt(r)
// from the first node with u(r0) ~ Z + s r0 (plus the r^(3/2) series
// term) using RK4 with two substeps per grid cell.
Shot shoot(double z, double slope, double mu, const std::vector<double>& r,
           double gamma) {
  const double k = 4.0 * pi / std::pow(gamma, 1.5);
  auto rhs = [&](double rr, double uu) {
    const double eff = uu - mu * rr;
    if (eff <= 0.0 || rr <= 0.0) return 0.0;
    return k * eff * std::sqrt(eff / rr);
  };
  Shot shot;
  shot.u.assign(r.size(), 0.0);
  const double r0 = r.front();
  double u = z + slope * r0 +
             (16.0 * pi / (3.0 * std::pow(gamma, 1.5))) * std::pow(z, 1.5) *
                 std::pow(r0, 1.5);
  double du = slope + (8.0 * pi / std::pow(gamma, 1.5)) * std::pow(z, 1.5) *
                          std::sqrt(r0);
  shot.u[0] = u;
  const int substeps = 2;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const double h = (r[i + 1] - r[i]) / substeps;
    double rr = r[i];
    for (int s = 0; s < substeps; ++s) {
      const double k1u = du, k1v = rhs(rr, u);
      const double k2u = du + 0.5 * h * k1v,
                   k2v = rhs(rr + 0.5 * h, u + 0.5 * h * k1u);
      const double k3u = du + 0.5 * h * k2v,
                   k3v = rhs(rr + 0.5 * h, u + 0.5 * h * k2u);
      const double k4u = du + h * k3v, k4v = rhs(rr + h, u + h * k3u);
      u += h * (k1u + 2 * k2u + 2 * k3u + k4u) / 6.0;
      du += h * (k1v + 2 * k2v + 2 * k3v + k4v) / 6.0;
      rr += h;
      if (u <= 0.0) {
        shot.fate = Shot::Fate::hit_zero;
        shot.exit_radius = rr;
        return shot;
      }
      if (mu > 0.0 && u <= mu * rr) {
        shot.fate = Shot::Fate::left_support;
        shot.exit_slope = du;
        shot.exit_radius = rr;
        return shot;
      }
    }
    shot.u[i + 1] = u;
    if (du >= 0.0) {
      shot.fate = Shot::Fate::turned_up;
      shot.exit_radius = r[i + 1];
      return shot;
    }
  }
  shot.fate = Shot::Fate::reached_end;
  shot.exit_slope = du;
  shot.exit_radius = r.back();
  return shot;
}

double max_equation_defect(const RadialGrid& grid,
                           const std::vector<double>& rho, double z, double mu,
                           double gamma) {
  auto vh = hartree_potential(grid, rho);
  double worst = 0.0;
  const auto& r = grid.nodes();
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double phi = z / r[i] - vh[i];
    const double lhs = gamma * std::pow(rho[i], 2.0 / 3.0);
    const double rhs = std::max(phi - mu, 0.0);
    if (rho[i] <= 0.0 && rhs <= 0.0) continue;
    worst = std::max(worst, std::abs(lhs - rhs) / (std::abs(phi) + 1.0));
  }
  return worst;
}

TfSolution finish_solution(const RadialGrid& grid, std::vector<double> u,
                           double z, double mu, double gamma) {
  const auto& r = grid.nodes();
  std::vector<double> rho(r.size()), phi(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    phi[i] = std::max(u[i], 0.0) / r[i];
    const double eff = phi[i] - mu;
    rho[i] = eff > 0.0 ? std::pow(eff / gamma, 1.5) : 0.0;
  }
  RadialDensity density(grid, rho);
  const double energy =
      tf_energy(density, z, TfConstants{2, gamma});
  TfSolution sol{std::move(density), std::move(phi), energy, z, mu,
                 max_equation_defect(grid, rho, z, mu, gamma), true};
  return sol;
}

}  // namespace

double tf_kinetic(const RadialDensity& rho, const TfConstants& constants) {
  const auto& r = rho.grid().nodes();
  std::vector<double> integrand(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    integrand[i] = 4.0 * pi * r[i] * r[i] * 0.6 * constants.gamma *
                   std::pow(rho.values()[i], 5.0 / 3.0);
  return integrate_radial(rho.grid(), integrand);
}

double tf_energy(const RadialDensity& rho, double z,
                 const TfConstants& constants) {
  if (z < 0.0) throw std::invalid_argument("tf_energy: Z must be >= 0");
  const auto& r = rho.grid().nodes();
  std::vector<double> attraction(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    attraction[i] = 4.0 * pi * r[i] * rho.values()[i];  // 4 pi r^2 rho / r
  const double nuclear = -z * integrate_radial(rho.grid(), attraction);
  return tf_kinetic(rho, constants) + nuclear + coulomb_self(rho);
}

RadialGrid tf_solver_grid(double z) {
  const double r_max = 250.0 * std::pow(std::max(z, 1e-3), -1.0 / 3.0);
  return RadialGrid::logarithmic(3500, 1e-10, r_max);
}

TfSolution solve_tf_neutral(double z, const RadialGrid& grid, double tol,
                            const TfConstants& c) {
  if (z <= 0.0) throw std::invalid_argument("solve_tf_neutral: Z must be > 0");
  const auto& r = grid.nodes();
  // Neutral slope scales like Z^(4/3); bracket generously.
  double lo = -10.0 * std::pow(z, 4.0 / 3.0) * std::max(1.0, c.gamma);
  double hi = 0.0;
  if (shoot(z, lo, 0.0, r, c.gamma).fate != Shot::Fate::hit_zero)
    throw std::runtime_error(
        "solve_tf_neutral: lower shooting bracket did not undershoot");
  Shot best = shoot(z, hi, 0.0, r, c.gamma);
  if (best.fate == Shot::Fate::hit_zero)
    throw std::runtime_error(
        "solve_tf_neutral: upper shooting bracket did not overshoot");
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    Shot s = shoot(z, mid, 0.0, r, c.gamma);
    if (s.fate == Shot::Fate::hit_zero)
      lo = mid;
    else {
      hi = mid;
      best = std::move(s);
    }
    if (hi - lo < 1e-16 * std::abs(lo)) break;
  }
  auto sol = finish_solution(grid, best.u, z, 0.0, c.gamma);
  sol.constrained_boundary = true;
  if (sol.residual > tol)
    throw std::runtime_error("solve_tf_neutral: residual above tolerance");
  return sol;
}

TfSolution solve_tf_neutral(double z, double tol, const TfConstants& c) {
  return solve_tf_neutral(z, tf_solver_grid(z), tol, c);
}

namespace {

// For fixed mu > 0: find the slope whose trajectory leaves the support
// {u > mu r} with u' = 0; returns mass = Z - mu * r_exit.
struct ConstrainedShot {
  std::vector<double> u;
  double mass;
  double exit_radius;
};

ConstrainedShot solve_for_mu(double z, double mu, const std::vector<double>& r,
                             double gamma) {
  double lo = -10.0 * std::pow(z, 4.0 / 3.0) * std::max(1.0, gamma) - mu;
  double hi = 0.0;
  Shot best = shoot(z, lo, mu, r, gamma);
  // lo must leave the support falling; hi must turn upward.
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    Shot s = shoot(z, mid, mu, r, gamma);
    const bool low = (s.fate == Shot::Fate::hit_zero) ||
                     (s.fate == Shot::Fate::left_support && s.exit_slope < 0.0);
    if (low) {
      lo = mid;
      best = std::move(s);
    } else {
      hi = mid;
      best = std::move(s);
    }
    if (hi - lo < 1e-16 * (std::abs(lo) + 1e-300)) break;
  }
  Shot s = shoot(z, 0.5 * (lo + hi), mu, r, gamma);
  double exit_radius = s.exit_radius;
  if (s.fate == Shot::Fate::reached_end) exit_radius = r.back();
  return {std::move(s.u), z - mu * exit_radius, exit_radius};
}

}  // namespace

TfSolution solve_tf_constrained(double z, double n_electrons,
                                const RadialGrid& grid, double tol,
                                const TfConstants& c) {
  if (z <= 0.0 || n_electrons <= 0.0)
    throw std::invalid_argument("solve_tf_constrained: need Z > 0, N > 0");
  if (n_electrons >= z) {
    auto sol = solve_tf_neutral(z, grid, tol, c);
    // No minimizer on the mass shell for N > Z; the neutral atom is the
    // minimizer over masses <= N.
    sol.constrained_boundary = !(n_electrons > z);
    return sol;
  }
  const auto& r = grid.nodes();
  // mass(mu) = Z - mu r_exit(mu) decreases in mu; bracket then bisect.
  double mu_lo = 1e-9 * std::pow(z, 4.0 / 3.0);
  double mu_hi = std::pow(z, 4.0 / 3.0) * c.gamma;
  while (solve_for_mu(z, mu_lo, r, c.gamma).mass < n_electrons) {
    mu_lo *= 0.25;
    if (mu_lo < 1e-18) break;
  }
  while (solve_for_mu(z, mu_hi, r, c.gamma).mass > n_electrons) mu_hi *= 4.0;
  ConstrainedShot best = solve_for_mu(z, mu_lo, r, c.gamma);
  double mu = mu_lo;
  for (int iter = 0; iter < 100; ++iter) {
    const double mid = 0.5 * (mu_lo + mu_hi);
    ConstrainedShot s = solve_for_mu(z, mid, r, c.gamma);
    if (s.mass > n_electrons)
      mu_lo = mid;
    else
      mu_hi = mid;
    mu = mid;
    best = std::move(s);
    if ((mu_hi - mu_lo) < 1e-14 * mu_hi) break;
  }
  auto sol = finish_solution(grid, best.u, z, mu, c.gamma);
  if (sol.residual > tol)
    throw std::runtime_error("solve_tf_constrained: residual above tolerance");
  return sol;
}

TfSolution solve_tf_constrained(double z, double n_electrons, double tol,
                                const TfConstants& c) {
  return solve_tf_constrained(z, n_electrons, tf_solver_grid(z), tol, c);
}

}  // namespace dfta::tf
