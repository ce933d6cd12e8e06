#ifndef DFTATOMS_RADIAL_GRID_HPP
#define DFTATOMS_RADIAL_GRID_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace dfta {

enum class GridSpacing { uniform, logarithmic };

/// Strictly increasing radial nodes r_i > 0 with positive quadrature
/// weights w_i such that sum_i w_i g(r_i) ~ int_0^rmax g(r) dr.
///
/// Weights come from integrating the local cubic interpolant over each
/// cell, so polynomials up to degree 3 (in particular constants) are
/// integrated exactly; the stub [0, r_0] is attached to the first node.
class RadialGrid {
 public:
  RadialGrid(std::vector<double> nodes, GridSpacing spacing);
  RadialGrid(std::vector<double> nodes, std::vector<double> weights,
             GridSpacing spacing);

  static RadialGrid logarithmic(std::size_t n, double r_min, double r_max);
  static RadialGrid uniform(std::size_t n, double r_max);

  /// Library default: logarithmic, 2000 nodes on [1e-6, 60] Bohr.
  static RadialGrid make_default();

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  GridSpacing spacing() const { return spacing_; }
  std::size_t size() const { return nodes_.size(); }
  double r_min() const { return nodes_.front(); }
  double r_max() const { return nodes_.back(); }

  bool same_as(const RadialGrid& other) const;

 private:
  void validate() const;

  std::vector<double> nodes_;
  std::vector<double> weights_;
  GridSpacing spacing_;
};

/// sum_i w_i samples_i. Throws std::invalid_argument on length mismatch.
double integrate_radial(const RadialGrid& grid,
                        const std::vector<double>& samples);

/// Prefix integrals F_i = int_{r_0}^{r_i} f(r) dr by cellwise cubic
/// interpolation (F_0 = 0). Same length contract as integrate_radial.
std::vector<double> cumulative_integral(const RadialGrid& grid,
                                        const std::vector<double>& samples);

/// Two-sided finite-difference derivative of samples on the grid
/// (4th order interior stencils in the log variable for log grids).
std::vector<double> radial_derivative(const RadialGrid& grid,
                                      const std::vector<double>& samples);

/// Cubic-cell interpolatory weights over [nodes.front(), nodes.back()]
/// for arbitrary strictly increasing nodes (no [0, r_0] stub).
std::vector<double> interpolatory_line_weights(
    const std::vector<double>& nodes);
std::vector<double> interpolatory_line_prefix(const std::vector<double>& nodes,
                                              const std::vector<double>& f);

}  // namespace dfta

#endif
