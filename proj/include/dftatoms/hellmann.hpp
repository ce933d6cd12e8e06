#ifndef DFTATOMS_HELLMANN_HPP
#define DFTATOMS_HELLMANN_HPP

#include <vector>

#include "dftatoms/radial_grid.hpp"

namespace dfta::tfw {

/// Per-angular-momentum radial densities rho_l(r) >= 0 (1D measure dr)
/// on a shared grid, l = 0..L.
class ChannelDensities {
 public:
  ChannelDensities(RadialGrid grid, std::vector<std::vector<double>> channels);

  const RadialGrid& grid() const { return grid_; }
  const std::vector<std::vector<double>>& channels() const {
    return channels_;
  }
  std::size_t channel_count() const { return channels_.size(); }
  double channel_mass(std::size_t l) const;  // int rho_l dr
  double total_mass() const;

 private:
  RadialGrid grid_;
  std::vector<std::vector<double>> channels_;
};

struct HwTerms {
  double gradient = 0.0;     // 1/2 sum_l int (sqrt(rho_l)')^2
  double centrifugal = 0.0;  // 1/2 sum_l int l(l+1) rho_l / r^2
  double cubic = 0.0;        // 1/2 sum_l int (pi^2/3) rho_l^3 / (2(2l+1))^2
  double external = 0.0;     // sum_l int V rho_l
  double hartree = 0.0;      // 1/2 sum_{l,l'} int int rho_l rho_l' / max(r,r')
  double total() const {
    return gradient + centrifugal + cubic + external + hartree;
  }
};

/// Hellmann-Weizsaecker functional with external potential V(r) = -Z/r.
HwTerms hw_energy_terms(const ChannelDensities& channels, double z);
double hw_energy(const ChannelDensities& channels, double z);

}  // namespace dfta::tfw

#endif
