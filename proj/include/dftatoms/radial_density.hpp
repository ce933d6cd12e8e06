#ifndef DFTATOMS_RADIAL_DENSITY_HPP
#define DFTATOMS_RADIAL_DENSITY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dftatoms/radial_grid.hpp"

namespace dfta {

/// Nonnegative samples of a spherically symmetric electron density
/// rho(r) in electrons/Bohr^3; mass = int 4 pi r^2 rho dr is cached.
class RadialDensity {
 public:
  RadialDensity(RadialGrid grid, std::vector<double> values);

  const RadialGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double mass() const { return mass_; }

  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;
  static RadialDensity read_csv(std::istream& is, GridSpacing spacing);

 private:
  RadialGrid grid_;
  std::vector<double> values_;
  double mass_;
};

/// Signed charge distribution on a radial grid (e.g. rho - sigma).
class ChargeDistribution {
 public:
  ChargeDistribution(RadialGrid grid, std::vector<double> values);

  const RadialGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double mass() const { return mass_; }

 private:
  RadialGrid grid_;
  std::vector<double> values_;
  double mass_;
};

/// int 4 pi r^2 f(r) dr on the grid.
double radial_mass(const RadialGrid& grid, const std::vector<double>& values);

}  // namespace dfta

#endif
