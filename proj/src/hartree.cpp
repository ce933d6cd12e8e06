#include "dftatoms/hartree.hpp"

#include <cmath>
#include <stdexcept>

#include "dftatoms/constants.hpp"

namespace dfta {

std::vector<double> hartree_potential(const RadialGrid& grid,
                                      const std::vector<double>& values) {
  const auto& r = grid.nodes();
  const std::size_t n = grid.size();
  std::vector<double> f_in(n), f_out(n);
  for (std::size_t i = 0; i < n; ++i) {
    f_in[i] = 4.0 * pi * r[i] * r[i] * values[i];
    f_out[i] = 4.0 * pi * r[i] * values[i];
  }
  auto q_in = cumulative_integral(grid, f_in);
  auto q_out = cumulative_integral(grid, f_out);
  // Charge below the first node, assuming rho flat there.
  const double stub = 4.0 * pi * values[0] * r[0] * r[0] * r[0] / 3.0;
  const double total_out = q_out.back();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = (q_in[i] + stub) / r[i] + (total_out - q_out[i]);
  return v;
}

std::vector<double> hartree_potential(const RadialDensity& rho) {
  return hartree_potential(rho.grid(), rho.values());
}

double coulomb_inner(const ChargeDistribution& a,
                     const ChargeDistribution& b) {
  if (!a.grid().same_as(b.grid()))
    throw std::invalid_argument("coulomb_inner: grid mismatch");
  auto vb = hartree_potential(a.grid(), b.values());
  const auto& r = a.grid().nodes();
  std::vector<double> integrand(a.values().size());
  for (std::size_t i = 0; i < integrand.size(); ++i)
    integrand[i] = 4.0 * pi * r[i] * r[i] * a.values()[i] * vb[i];
  return 0.5 * integrate_radial(a.grid(), integrand);
}

double coulomb_self(const RadialDensity& rho) {
  auto v = hartree_potential(rho);
  const auto& r = rho.grid().nodes();
  std::vector<double> integrand(rho.values().size());
  for (std::size_t i = 0; i < integrand.size(); ++i)
    integrand[i] = 4.0 * pi * r[i] * r[i] * rho.values()[i] * v[i];
  return 0.5 * integrate_radial(rho.grid(), integrand);
}

}  // namespace dfta
