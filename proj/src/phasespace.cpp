#include "dftatoms/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dftatoms/bathtub.hpp"
#include "dftatoms/constants.hpp"
#include "dftatoms/hartree.hpp"

namespace dfta::ps {

namespace {

const double planck_cube = std::pow(2.0 * pi, 3);  // h^3, Hartree units

// Momentum cell measures dbar-p_j = 4 pi p_j^2 w_j / (2 pi)^3.
std::vector<double> momentum_measures(const RadialGrid& momentum) {
  const auto& p = momentum.nodes();
  std::vector<double> m(momentum.size());
  for (std::size_t j = 0; j < momentum.size(); ++j)
    m[j] = 4.0 * pi * p[j] * p[j] * momentum.weights()[j] / planck_cube;
  return m;
}

}  // namespace

PhaseSpaceDensity::PhaseSpaceDensity(RadialGrid position, RadialGrid momentum,
                                     std::vector<double> values, double q)
    : position_(std::move(position)), momentum_(std::move(momentum)),
      values_(std::move(values)), q_(q) {
  if (values_.size() != position_.size() * momentum_.size())
    throw std::invalid_argument("phase-space density: value size mismatch");
  for (double v : values_)
    if (!(v >= 0.0) || v > q_ * (1.0 + 1e-12))
      throw std::invalid_argument("phase-space density: values outside [0,q]");
}

RadialDensity PhaseSpaceDensity::position_marginal() const {
  auto measures = momentum_measures(momentum_);
  std::vector<double> rho(position_.size(), 0.0);
  for (std::size_t i = 0; i < position_.size(); ++i) {
    long double acc = 0.0L;
    for (std::size_t j = 0; j < momentum_.size(); ++j)
      acc += measures[j] * value(i, j);
    rho[i] = static_cast<double>(acc);
  }
  return RadialDensity(position_, std::move(rho));
}

std::vector<double> PhaseSpaceDensity::momentum_marginal() const {
  const auto& r = position_.nodes();
  std::vector<double> tau(momentum_.size(), 0.0);
  for (std::size_t j = 0; j < momentum_.size(); ++j) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < position_.size(); ++i)
      acc += 4.0 * pi * r[i] * r[i] * position_.weights()[i] * value(i, j);
    tau[j] = static_cast<double>(acc);
  }
  return tau;
}

double PhaseSpaceDensity::particle_number() const {
  return position_marginal().mass();
}

MomentumDensity::MomentumDensity(RadialGrid momentum,
                                 std::vector<double> values)
    : momentum_(std::move(momentum)), values_(std::move(values)) {
  if (values_.size() != momentum_.size())
    throw std::invalid_argument("momentum density: value size mismatch");
  for (double v : values_)
    if (!(v >= 0.0))
      throw std::invalid_argument("momentum density must be >= 0");
  auto measures = momentum_measures(momentum_);
  long double acc = 0.0L;
  for (std::size_t j = 0; j < values_.size(); ++j)
    acc += measures[j] * values_[j];
  mass_ = static_cast<double>(acc);
}

RadialGrid momentum_grid_for(const std::vector<double>& phi, std::size_t n) {
  double phi_max = 0.0;
  for (double v : phi) phi_max = std::max(phi_max, v);
  if (phi_max <= 0.0)
    throw std::invalid_argument("momentum_grid_for: potential must be > 0");
  const double p_max = 4.0 * std::sqrt(2.0 * phi_max);
  return RadialGrid::uniform(n, p_max);
}

double phase_energy(const PhaseSpaceDensity& f, double z) {
  const auto& r = f.position_grid().nodes();
  const auto& p = f.momentum_grid().nodes();
  auto measures = momentum_measures(f.momentum_grid());
  // Kinetic: sum over cells of (p^2/2) f dbar-p 4 pi r^2 dr.
  long double kinetic = 0.0L;
  for (std::size_t i = 0; i < f.position_grid().size(); ++i) {
    const double wr =
        4.0 * pi * r[i] * r[i] * f.position_grid().weights()[i];
    long double slice = 0.0L;
    for (std::size_t j = 0; j < f.momentum_grid().size(); ++j)
      slice += 0.5 * p[j] * p[j] * measures[j] * f.value(i, j);
    kinetic += wr * slice;
  }
  auto rho = f.position_marginal();
  std::vector<double> attraction(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    attraction[i] = 4.0 * pi * r[i] * rho.values()[i];
  const double external = -z * integrate_radial(f.position_grid(), attraction);
  return static_cast<double>(kinetic) + external + coulomb_self(rho);
}

PhaseSpaceDensity fermi_indicator(const RadialGrid& position,
                                  const std::vector<double>& phi,
                                  const RadialGrid& momentum, double q) {
  if (phi.size() != position.size())
    throw std::invalid_argument("fermi_indicator: phi length mismatch");
  const auto& p = momentum.nodes();
  std::vector<double> values(position.size() * momentum.size(), 0.0);
  for (std::size_t i = 0; i < position.size(); ++i)
    for (std::size_t j = 0; j < momentum.size(); ++j)
      if (0.5 * p[j] * p[j] < phi[i]) values[i * momentum.size() + j] = q;
  return PhaseSpaceDensity(position, momentum, std::move(values), q);
}

PhaseSpaceDensity minimize_momentum_slices(const RadialDensity& rho,
                                           const RadialGrid& momentum,
                                           double q) {
  const auto& p = momentum.nodes();
  auto measures = momentum_measures(momentum);
  std::vector<double> levels(momentum.size());
  for (std::size_t j = 0; j < momentum.size(); ++j)
    levels[j] = 0.5 * p[j] * p[j];
  double capacity = 0.0;
  for (double m : measures) capacity += q * m;
  std::vector<double> values(rho.grid().size() * momentum.size(), 0.0);
  for (std::size_t i = 0; i < rho.grid().size(); ++i) {
    const double target = rho.values()[i];
    if (target == 0.0) continue;
    if (target > capacity)
      throw std::domain_error(
          "minimize_momentum_slices: momentum grid cannot hold the density");
    auto fill = bathtub_fill(levels, measures, q, target);
    std::copy(fill.occupations.begin(), fill.occupations.end(),
              values.begin() + i * momentum.size());
  }
  return PhaseSpaceDensity(rho.grid(), momentum, std::move(values), q);
}

double englert_energy(const MomentumDensity& tau, double z) {
  const auto& grid = tau.grid();
  const auto& p = grid.nodes();
  const std::size_t n = grid.size();
  // The functional's tau is a density per plain dxi; ours is per dbar-p.
  std::vector<double> plain(n), s_weight(n);
  for (std::size_t j = 0; j < n; ++j) {
    plain[j] = tau.values()[j] / planck_cube;
    s_weight[j] = 4.0 * pi * p[j] * p[j] * grid.weights()[j];
  }
  auto measures = momentum_measures(grid);
  long double kinetic = 0.0L;
  for (std::size_t j = 0; j < n; ++j)
    kinetic += 0.5 * p[j] * p[j] * measures[j] * tau.values()[j];

  const double c13 = std::cbrt(3.0 * pi * pi);
  long double external = 0.0L;
  for (std::size_t j = 0; j < n; ++j)
    external += s_weight[j] * std::pow(plain[j], 2.0 / 3.0);
  const double ext = -1.5 * z / c13 * static_cast<double>(external);

  std::vector<double> pow23(n), pow53(n);
  for (std::size_t j = 0; j < n; ++j) {
    pow23[j] = std::pow(plain[j], 2.0 / 3.0);
    pow53[j] = plain[j] * pow23[j];
  }
  long double pair = 0.0L;
  for (std::size_t j = 0; j < n; ++j) {
    long double row = 0.0L;
    for (std::size_t k = 0; k < n; ++k) {
      const bool j_small = plain[j] <= plain[k];
      const double lo53 = j_small ? pow53[j] : pow53[k];
      const double cross = j_small ? plain[j] * pow23[k] : plain[k] * pow23[j];
      row += s_weight[k] * (cross - 0.2 * lo53);
    }
    pair += s_weight[j] * row;
  }
  const double interaction = 0.75 / c13 * static_cast<double>(pair);
  return static_cast<double>(kinetic) + ext + interaction;
}

}  // namespace dfta::ps
