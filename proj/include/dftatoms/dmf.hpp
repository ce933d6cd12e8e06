#ifndef DFTATOMS_DMF_HPP
#define DFTATOMS_DMF_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "dftatoms/fockspace.hpp"
#include "dftatoms/radial_grid.hpp"

namespace dfta::dmf {

using Complex = std::complex<double>;

/// Hermitian gamma with eigenvalues in [0, 1]; eigendecomposition cached.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd matrix);

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  const Eigen::VectorXd& occupations() const { return occupations_; }
  const Eigen::MatrixXcd& natural_orbitals() const { return orbitals_; }
  double trace() const { return occupations_.sum(); }
  int size() const { return static_cast<int>(matrix_.rows()); }

  Eigen::MatrixXcd sqrt() const;  // operator square root
  bool is_projection(double tol = 1e-6) const;

 private:
  Eigen::MatrixXcd matrix_;
  Eigen::VectorXd occupations_;
  Eigen::MatrixXcd orbitals_;
};

/// Finite-basis problem: one-body h and the pair coefficients W_{mnpq}
/// shared with fockspace; J/K are the direct/exchange contractions.
struct TwoBodyProblem {
  fock::ManyBodyOperatorSpec spec;
  bool psd_kernel = false;

  explicit TwoBodyProblem(fock::ManyBodyOperatorSpec s, bool psd = false)
      : spec(std::move(s)), psd_kernel(psd) {}
  int size() const { return spec.modes(); }

  /// J(gamma)_{mp} = sum_{nq} W_{mnpq} gamma_{qn}.
  Eigen::MatrixXcd direct_map(const Eigen::MatrixXcd& gamma) const;
  /// K(gamma)_{mq} = sum_{np} W_{mnpq} gamma_{pn}.
  Eigen::MatrixXcd exchange_map(const Eigen::MatrixXcd& gamma) const;

  double direct_energy(const Eigen::MatrixXcd& gamma) const;    // 1/2 tr(g J(g))
  double exchange_energy(const Eigen::MatrixXcd& gamma) const;  // 1/2 tr(g K(g))
};

double hf_energy(const DensityMatrix& gamma, const TwoBodyProblem& prob);
double muller_energy(const DensityMatrix& gamma, const TwoBodyProblem& prob);

/// F(gamma) = h + J(gamma) - K(gamma), the gradient of hf_energy.
Eigen::MatrixXcd fock_operator(const DensityMatrix& gamma,
                               const TwoBodyProblem& prob);
/// Gradient of the Mueller energy (Loewner divided differences of the
/// square root in the natural-orbital basis).
Eigen::MatrixXcd muller_gradient(const DensityMatrix& gamma,
                                 const TwoBodyProblem& prob);

enum class Functional { hf, mueller };

struct MinimizeOptions {
  double tol = 1e-8;       // projected-gradient norm target
  int max_iterations = 5000;
  int restarts = 5;
  std::uint64_t seed = 1;
};

struct MinimizeResult {
  DensityMatrix gamma;
  double energy;
  double projected_gradient_norm;
  int iterations;
  bool converged;
};

/// Projected-gradient descent over {0 <= gamma <= 1, tr gamma = N}; the
/// eigenvalue projection is the Euclidean capped-simplex projection.
/// For the HF functional the best iterate is pushed to a projection by
/// the two-eigenvalue exchange perturbation before returning.
MinimizeResult minimize_dmf(const TwoBodyProblem& prob, int n_electrons,
                            Functional functional,
                            const MinimizeOptions& opt = {});

/// Bundled problems.
/// (a) s-channel hydrogen-like atom: lowest `modes` radial eigenstates
///     of -1/2 d^2/dr^2 - Z/r with the 1/max(r,r') pair kernel (psd).
TwoBodyProblem radial_s_channel_problem(int modes, double z,
                                        std::size_t grid_points = 240,
                                        double r_max = 30.0);
/// (b) random Hermitian instance; psd pair kernel when psd is true.
TwoBodyProblem random_problem(int modes, std::uint64_t seed, bool psd);

/// Random density matrix with trace n (eigenvalues in [0,1]).
DensityMatrix random_density_matrix(int modes, double trace,
                                    std::uint64_t seed);

}  // namespace dfta::dmf

#endif
