#ifndef DFTATOMS_PHASESPACE_HPP
#define DFTATOMS_PHASESPACE_HPP

#include <vector>

#include "dftatoms/radial_density.hpp"

namespace dfta::ps {

/// f(r_i, p_j) in [0, q] on a radial x momentum product grid with the
/// measure 4 pi r^2 dr x 4 pi p^2 dp / (2 pi)^3.
class PhaseSpaceDensity {
 public:
  PhaseSpaceDensity(RadialGrid position, RadialGrid momentum,
                    std::vector<double> values, double q = 2.0);

  const RadialGrid& position_grid() const { return position_; }
  const RadialGrid& momentum_grid() const { return momentum_; }
  double cap() const { return q_; }
  double value(std::size_t ir, std::size_t ip) const {
    return values_[ir * momentum_.size() + ip];
  }
  const std::vector<double>& values() const { return values_; }

  RadialDensity position_marginal() const;        // rho(r) = int f dbar-p
  std::vector<double> momentum_marginal() const;  // tau(p) = int f dx (per dbar-p)
  double particle_number() const;

 private:
  RadialGrid position_;
  RadialGrid momentum_;
  std::vector<double> values_;
  double q_;
};

/// tau(p_j) >= 0 on a momentum grid, a density per dbar-p = 4 pi p^2 dp/(2 pi)^3.
class MomentumDensity {
 public:
  MomentumDensity(RadialGrid momentum, std::vector<double> values);
  const RadialGrid& grid() const { return momentum_; }
  const std::vector<double>& values() const { return values_; }
  double mass() const { return mass_; }

 private:
  RadialGrid momentum_;
  std::vector<double> values_;
  double mass_;
};

/// Uniform momentum grid on (0, p_max] with p_max = 4 max sqrt(2 phi).
RadialGrid momentum_grid_for(const std::vector<double>& phi, std::size_t n);

/// Kinetic + external (-Z/r) + D[rho_f].
double phase_energy(const PhaseSpaceDensity& f, double z);

/// f = q * indicator(p^2/2 < phi(r)).
PhaseSpaceDensity fermi_indicator(const RadialGrid& position,
                                  const std::vector<double>& phi,
                                  const RadialGrid& momentum, double q = 2.0);

/// Per-radius bathtub fill of the momentum cells with levels p^2/2 and
/// cap q to mass rho(r); the position marginal reproduces rho exactly.
PhaseSpaceDensity minimize_momentum_slices(const RadialDensity& rho,
                                           const RadialGrid& momentum,
                                           double q = 2.0);

/// Englert momentum-space functional evaluated on tau. The kinetic term
/// carries xi^2/2 as required by the ball-filling reduction (the factor
/// making the reduction reproduce the Thomas-Fermi energy).
double englert_energy(const MomentumDensity& tau, double z);

}  // namespace dfta::ps

#endif
