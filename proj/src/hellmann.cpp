#include "dftatoms/hellmann.hpp"

#include <cmath>
#include <stdexcept>

#include "dftatoms/constants.hpp"

namespace dfta::tfw {

ChannelDensities::ChannelDensities(RadialGrid grid,
                                   std::vector<std::vector<double>> channels)
    : grid_(std::move(grid)), channels_(std::move(channels)) {
  if (channels_.empty())
    throw std::invalid_argument("channel densities: need >= 1 channel");
  for (const auto& ch : channels_) {
    if (ch.size() != grid_.size())
      throw std::invalid_argument("channel densities: length mismatch");
    for (double v : ch)
      if (!(v >= 0.0))
        throw std::invalid_argument("channel densities must be >= 0");
  }
}

double ChannelDensities::channel_mass(std::size_t l) const {
  return integrate_radial(grid_, channels_.at(l));
}

double ChannelDensities::total_mass() const {
  double m = 0.0;
  for (std::size_t l = 0; l < channels_.size(); ++l) m += channel_mass(l);
  return m;
}

HwTerms hw_energy_terms(const ChannelDensities& channels, double z) {
  const auto& grid = channels.grid();
  const auto& r = grid.nodes();
  const std::size_t n = grid.size();
  HwTerms terms;

  // Radial Hartree kernel: sum over channels first, then one 1/max pass.
  std::vector<double> rho_sum(n, 0.0);
  for (const auto& ch : channels.channels())
    for (std::size_t i = 0; i < n; ++i) rho_sum[i] += ch[i];

  for (std::size_t l = 0; l < channels.channel_count(); ++l) {
    const auto& rho = channels.channels()[l];
    std::vector<double> sqrt_rho(n);
    for (std::size_t i = 0; i < n; ++i) sqrt_rho[i] = std::sqrt(rho[i]);
    auto d = radial_derivative(grid, sqrt_rho);
    std::vector<double> grad(n), cent(n), cubic(n), ext(n);
    const double ll = static_cast<double>(l) * (l + 1.0);
    const double cubic_coef =
        (pi * pi / 3.0) / std::pow(2.0 * (2.0 * l + 1.0), 2);
    for (std::size_t i = 0; i < n; ++i) {
      grad[i] = d[i] * d[i];
      cent[i] = ll * rho[i] / (r[i] * r[i]);
      cubic[i] = cubic_coef * rho[i] * rho[i] * rho[i];
      ext[i] = -(z / r[i]) * rho[i];
    }
    terms.gradient += 0.5 * integrate_radial(grid, grad);
    terms.centrifugal += 0.5 * integrate_radial(grid, cent);
    terms.cubic += 0.5 * integrate_radial(grid, cubic);
    terms.external += integrate_radial(grid, ext);
  }

  // 1/2 int int rho(r) rho(r') / max(r,r') via cumulative integrals:
  // V(r) = (1/r) int_0^r rho + int_r^inf rho / s ds.
  std::vector<double> over_s(n);
  for (std::size_t i = 0; i < n; ++i) over_s[i] = rho_sum[i] / r[i];
  auto q_in = cumulative_integral(grid, rho_sum);
  auto q_over = cumulative_integral(grid, over_s);
  const double total_over = q_over.back();
  std::vector<double> integrand(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = q_in[i] / r[i] + (total_over - q_over[i]);
    integrand[i] = rho_sum[i] * v;
  }
  terms.hartree = 0.5 * integrate_radial(grid, integrand);
  return terms;
}

double hw_energy(const ChannelDensities& channels, double z) {
  return hw_energy_terms(channels, z).total();
}

}  // namespace dfta::tfw
