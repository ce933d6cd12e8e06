#ifndef DFTATOMS_MACKE_HPP
#define DFTATOMS_MACKE_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "dftatoms/hellmann.hpp"
#include "dftatoms/radial_grid.hpp"

namespace dfta::macke {

using Complex = std::complex<double>;

/// Uniform 1D line grid with interpolatory (cubic-cell) weights.
struct LineGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  double h = 0.0;

  static LineGrid uniform(std::size_t n, double a, double b);
  std::size_t size() const { return nodes.size(); }
  double integrate(const std::vector<double>& samples) const;
  std::vector<double> cumulative(const std::vector<double>& samples) const;
  std::vector<double> derivative(const std::vector<double>& samples) const;
};

/// phi_n(x) = sqrt(rho/N) exp(i 2 pi (n - a) Y(x)), Y the mass CDF.
class OrbitalSet1d {
 public:
  OrbitalSet1d(LineGrid grid, std::vector<double> density, double a);

  int particle_count() const { return n_; }
  double phase() const { return a_; }
  const LineGrid& grid() const { return grid_; }
  const std::vector<double>& cdf() const { return y_; }

  Complex value(int orbital, std::size_t node) const;
  std::vector<Complex> orbital(int orbital) const;
  Eigen::MatrixXcd gram() const;
  std::vector<double> density() const;  // sum_n |phi_n|^2
  /// 1/2 sum_n int |phi_n'|^2 by 5-point finite differences.
  double slater_kinetic() const;

 private:
  LineGrid grid_;
  std::vector<double> amp_;  // sqrt(rho/N)
  std::vector<double> y_;
  double a_;
  int n_;
};

OrbitalSet1d macke_orbitals_1d(const LineGrid& grid,
                               const std::vector<double>& rho, double a);

/// 1/2 int [ (sqrt(rho)')^2 + (pi^2/3)(1 - 1/N^2) rho^3 ].
double kinetic_upper_bound_1d(const LineGrid& grid,
                              const std::vector<double>& rho, int n_particles);

/// Golden-section search for the phase minimizing the Slater kinetic
/// energy; returns (a, kinetic at a).
std::pair<double, double> optimal_phase_1d(const LineGrid& grid,
                                           const std::vector<double>& rho);

// --- Two-dimensional generalization -------------------------------------

struct TensorGrid2d {
  LineGrid x, y;
  std::size_t size() const { return x.size() * y.size(); }
};

/// phi_nu = sqrt(|det J|) exp(i 2 pi (n_nu - a).Y) with the triangular
/// transform Y = (conditional CDF in x, marginal CDF in y); det J = rho/N.
class OrbitalSet2d {
 public:
  OrbitalSet2d(TensorGrid2d grid, std::vector<double> density,
               std::vector<std::array<int, 2>> indices,
               std::array<double, 2> a);

  int particle_count() const { return static_cast<int>(indices_.size()); }
  const TensorGrid2d& grid() const { return grid_; }
  const std::vector<double>& conditional_cdf() const { return cond_cdf_; }
  const std::vector<double>& marginal_cdf() const { return marg_cdf_; }

  Complex value(int orbital, std::size_t ix, std::size_t iy) const;
  Eigen::MatrixXcd gram() const;
  std::vector<double> density() const;        // row-major [iy*nx+ix]
  std::vector<double> det_jacobian() const;   // by differentiating the CDFs

 private:
  TensorGrid2d grid_;
  std::vector<double> rho_over_n_;  // row-major
  std::vector<double> cond_cdf_;    // F(x | y), row-major
  std::vector<double> marg_cdf_;    // G(y)
  std::vector<std::array<int, 2>> indices_;
  std::array<double, 2> a_;
};

OrbitalSet2d macke_orbitals_2d(const TensorGrid2d& grid,
                               const std::vector<double>& rho,
                               const std::vector<std::array<int, 2>>& indices,
                               std::array<double, 2> a);

// --- Radial channel variant ---------------------------------------------

struct ChannelOccupation {
  int l = 0, m = 0, s = 0;  // quantum labels; m, s opaque
  int count = 0;            // N_{l,m,s}
};

/// Radial parts u_n(r) = sqrt(Y_l'(r)) exp(i 2 pi (n - a_l) Y_l(r)) per
/// (l,m,s) block; the angular/spin labels are opaque quantum numbers.
class RadialOrbitalSet {
 public:
  struct Block {
    ChannelOccupation occ;
    double a;
    std::vector<double> amp;  // sqrt(Y_l')
    std::vector<double> y;    // Y_l
  };

  RadialOrbitalSet(RadialGrid grid, std::vector<Block> blocks);

  const RadialGrid& grid() const { return grid_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  Complex value(const Block& block, int orbital, std::size_t node) const;
  Eigen::MatrixXcd block_gram(const Block& block) const;
  /// Summed radial density of all blocks with angular momentum l.
  std::vector<double> channel_density(int l) const;
  /// 1/2 sum_n int (|u_n'|^2 + l(l+1)|u_n|^2/r^2) dr for one block.
  double block_kinetic(const Block& block) const;

 private:
  RadialGrid grid_;
  std::vector<Block> blocks_;
};

RadialOrbitalSet radial_macke(const tfw::ChannelDensities& channels,
                              const std::vector<ChannelOccupation>& occupations,
                              const std::vector<double>& a_l);

}  // namespace dfta::macke

#endif
