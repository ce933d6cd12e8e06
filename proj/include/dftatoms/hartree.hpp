#ifndef DFTATOMS_HARTREE_HPP
#define DFTATOMS_HARTREE_HPP

#include <vector>

#include "dftatoms/radial_density.hpp"

namespace dfta {

/// Electrostatic potential V(r_i) = int 4 pi s^2 rho(s) / max(r_i, s) ds,
/// evaluated in O(n) from the two cumulative integrals
/// Q_in(r) = int_0^r 4 pi s^2 rho and Q_out(r) = int_r^inf 4 pi s rho.
std::vector<double> hartree_potential(const RadialDensity& rho);
std::vector<double> hartree_potential(const RadialGrid& grid,
                                      const std::vector<double>& values);

/// Coulomb inner product D(a,b) = 1/2 int int a(x) b(y)/|x-y| dx dy
/// = 1/2 int 4 pi r^2 a(r) V_b(r) dr. Grids must match.
double coulomb_inner(const ChargeDistribution& a, const ChargeDistribution& b);
double coulomb_self(const RadialDensity& rho);

}  // namespace dfta

#endif
