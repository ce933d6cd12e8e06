#ifndef DFTATOMS_THOMASFERMI_HPP
#define DFTATOMS_THOMASFERMI_HPP

#include <optional>
#include <vector>

#include "dftatoms/constants.hpp"
#include "dftatoms/radial_density.hpp"

namespace dfta::tf {

struct TfConstants {
  int spin_states = 2;
  double gamma = gamma_tf(2);  // Hartree * Bohr^2
};

struct TfSolution {
  RadialDensity rho;
  std::vector<double> phi;  // Thomas-Fermi potential at the nodes
  double energy = 0.0;      // Hartree
  double z = 0.0;
  double mu = 0.0;          // chemical potential (0 for the neutral atom)
  double residual = 0.0;    // max relative defect of gamma rho^(2/3) = phi - mu
  bool constrained_boundary = true;  // minimizer sits on the mass boundary
};

/// int (3/5 gamma rho^(5/3) - Z rho / r) 4 pi r^2 dr + D[rho].
double tf_energy(const RadialDensity& rho, double z,
                 const TfConstants& constants = {});

/// Kinetic term alone, (3/5) gamma int rho^(5/3).
double tf_kinetic(const RadialDensity& rho, const TfConstants& constants = {});

/// Grid on which the solver resolves both the r^(-1/2) cusp quadrature
/// and the Sommerfeld tail of the neutral atom: logarithmic,
/// [1e-10, 250 Z^(-1/3)] with 3500 nodes.
RadialGrid tf_solver_grid(double z);

/// Neutral-atom solution of gamma rho^(2/3) = phi_Z by shooting on
/// u'(0) for u = r phi.
TfSolution solve_tf_neutral(double z, const RadialGrid& grid,
                            double tol = 1e-6, const TfConstants& c = {});
TfSolution solve_tf_neutral(double z, double tol = 1e-6,
                            const TfConstants& c = {});

/// Minimizer over densities with mass <= n_electrons. For
/// n_electrons >= Z this is the neutral solution and
/// constrained_boundary is false (no minimizer on the mass shell).
TfSolution solve_tf_constrained(double z, double n_electrons,
                                const RadialGrid& grid, double tol = 1e-6,
                                const TfConstants& c = {});
TfSolution solve_tf_constrained(double z, double n_electrons,
                                double tol = 1e-6, const TfConstants& c = {});

}  // namespace dfta::tf

#endif
