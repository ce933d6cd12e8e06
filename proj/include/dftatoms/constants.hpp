#ifndef DFTATOMS_CONSTANTS_HPP
#define DFTATOMS_CONSTANTS_HPP

#include <cmath>

namespace dfta {

inline constexpr double pi = 3.14159265358979323846;

/// Thomas-Fermi constant (hbar^2/2m)(6 pi^2/q)^(2/3) in Hartree units.
inline double gamma_tf(int spin_states = 2) {
  return 0.5 * std::pow(6.0 * pi * pi / spin_states, 2.0 / 3.0);
}

/// Coefficient of the -Z^(7/3) lower bound on the TF energy,
/// 2^(8/3) 3^(1/3) / (5 pi)^(2/3) ~= 1.46.
inline double tf_lower_bound_coefficient() {
  return std::pow(2.0, 8.0 / 3.0) * std::pow(3.0, 1.0 / 3.0) /
         std::pow(5.0 * pi, 2.0 / 3.0);
}

/// Speed of light in Hartree units.
inline constexpr double speed_of_light = 137.037;

}  // namespace dfta

#endif
