#ifndef DFTATOMS_TFW_HPP
#define DFTATOMS_TFW_HPP

#include <vector>

#include "dftatoms/radial_density.hpp"
#include "dftatoms/thomasfermi.hpp"

namespace dfta::tfw {

struct TfwSolution {
  RadialDensity rho;
  std::vector<double> psi;  // sqrt(rho) samples, Bohr^(-3/2)
  double mu = 0.0;          // chemical potential, >= 0 when bound
  double lambda = 0.0;      // Weizsaecker coefficient
  double energy = 0.0;      // Hartree
  double euler_residual = 0.0;
  bool bound = true;        // false when mass escapes to the boundary
  int iterations = 0;
  double max_accepted_increase = 0.0;  // worst per-step energy increase
};

struct TfwOptions {
  double tol = 1e-8;        // Euler residual target (weighted norm)
  int max_iterations = 40000;
  double dt0 = 0.05;
  bool throw_on_failure = true;  // unbound/stalled flows throw when true
};

/// lambda/2 int |grad sqrt(rho)|^2 + E_TF(rho, Z).
double tfw_energy(const RadialDensity& rho, double z, double lambda,
                  const tf::TfConstants& c = {});

/// Weizsaecker term alone.
double weizsaecker_term(const RadialDensity& rho, double lambda);

/// Constrained minimizer over {int rho = N} by an imaginary-time flow
/// on psi = sqrt(rho): semi-implicit steps with mass renormalization
/// and step halving whenever the energy fails to decrease.
TfwSolution minimize_tfw(double z, double n_electrons, double lambda,
                         const RadialGrid& grid, const TfwOptions& opt = {},
                         const tf::TfConstants& c = {});
TfwSolution minimize_tfw(double z, double n_electrons, double lambda,
                         const TfwOptions& opt = {},
                         const tf::TfConstants& c = {});

struct CriticalCharge {
  double n_lower;  // largest mass observed bound
  double n_upper;  // smallest mass observed unbound
};

/// Bisection on N for the largest bound electron number. The initial
/// bracket is (Z, Z + 270.74 (lambda/(2 gamma))^(3/2)] capped below 2Z.
CriticalCharge critical_charge(double z, double lambda, const RadialGrid& grid,
                               double tol = 2e-2,
                               const tf::TfConstants& c = {});
CriticalCharge critical_charge(double z, double lambda, double tol = 2e-2,
                               const tf::TfConstants& c = {});

/// The Benguria-Lieb excess-charge cap Z + 270.74 (lambda/(2 gamma))^(3/2).
double excess_charge_cap(double z, double lambda,
                         const tf::TfConstants& c = {});

}  // namespace dfta::tfw

#endif
