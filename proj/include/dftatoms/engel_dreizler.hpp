#ifndef DFTATOMS_ENGEL_DREIZLER_HPP
#define DFTATOMS_ENGEL_DREIZLER_HPP

#include "dftatoms/constants.hpp"
#include "dftatoms/radial_density.hpp"

namespace dfta::ed {

struct EdParams {
  double c = speed_of_light;  // Hartree units
  double lambda = 1.0 / 9.0;  // gradient-expansion value
  double z = 0.0;
};

struct EdKernels {
  double f2;   // inhomogeneity correction f(t)^2
  double ttf;  // relativistic Thomas-Fermi kernel T^TF(t)
  double x;    // exchange kernel X(t)
};

/// Kernel functions of t = p/c >= 0. Below t = 0.08 the series
/// expansions are used; ttf and x lose all significant digits to
/// cancellation there otherwise.
EdKernels ed_kernels(double t);

struct EdTerms {
  double weizsaecker = 0.0;  // T^W
  double kinetic = 0.0;      // T^TF
  double exchange = 0.0;     // X (enters with minus sign)
  double potential = 0.0;    // -Z int rho/r + D[rho]
  double total() const { return weizsaecker + kinetic - exchange + potential; }
};

EdTerms ed_energy_terms(const RadialDensity& rho, const EdParams& params);
double ed_energy(const RadialDensity& rho, const EdParams& params);

}  // namespace dfta::ed

#endif
