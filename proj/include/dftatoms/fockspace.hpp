#ifndef DFTATOMS_FOCKSPACE_HPP
#define DFTATOMS_FOCKSPACE_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace dfta::fock {

using Complex = std::complex<double>;

/// Finite set of M <= 14 orthonormal one-particle modes.
struct OrbitalBasis {
  explicit OrbitalBasis(int modes);
  int size() const { return modes_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int modes_;
  std::vector<std::string> labels_;
};

/// Vector in the 2^M dimensional Fock space, amplitudes indexed by
/// occupation bitmasks (bit n set <=> mode n occupied).
class FockVector {
 public:
  explicit FockVector(int modes);
  FockVector(int modes, Eigen::VectorXcd amplitudes);

  static FockVector vacuum(int modes);
  static FockVector basis_state(int modes, unsigned mask);

  int modes() const { return modes_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Eigen::VectorXcd& amplitudes() { return amplitudes_; }

  double norm() const { return amplitudes_.norm(); }
  Complex dot(const FockVector& other) const;  // <this, other>
  /// Norm^2 restricted to the N-particle sector.
  double sector_weight(int n_particles) const;
  /// -1 if amplitudes spread over several sectors, else the sector.
  int single_sector(double tol = 1e-12) const;

 private:
  int modes_;
  Eigen::VectorXcd amplitudes_;
};

/// One-body matrix h_{mn} and two-body coefficients W_{mnpq} of
/// H = sum h_{mn} a*_m a_n + 1/2 sum W_{mnpq} a*_m a*_n a_q a_p
/// with W_{mnpq} = <mn|W|pq>, pair symmetry W_{mnpq} = W_{nmqp} and
/// Hermiticity conj(W_{mnpq}) = W_{pqmn}.
struct ManyBodyOperatorSpec {
  Eigen::MatrixXcd one_body;
  std::vector<std::vector<std::vector<std::vector<Complex>>>> two_body;

  explicit ManyBodyOperatorSpec(int modes);
  int modes() const { return static_cast<int>(one_body.rows()); }
  Complex& w(int m, int n, int p, int q) { return two_body[m][n][p][q]; }
  Complex w(int m, int n, int p, int q) const { return two_body[m][n][p][q]; }
  /// Throws std::invalid_argument if symmetries are violated beyond tol.
  void check_symmetries(double tol = 1e-12) const;

  static ManyBodyOperatorSpec from_json_string(const std::string& text);
};

FockVector annihilate(int mode, const FockVector& psi);
FockVector create(int mode, const FockVector& psi);
/// 2^M x 2^M matrix of a_mode in the bitmask basis.
Eigen::MatrixXcd annihilate_matrix(int modes, int mode);
Eigen::MatrixXcd create_matrix(int modes, int mode);

FockVector apply_hamiltonian(const ManyBodyOperatorSpec& spec,
                             const FockVector& psi);
/// Dense 2^M Hamiltonian (modes <= 12).
Eigen::MatrixXcd assemble_hamiltonian(const ManyBodyOperatorSpec& spec);

/// Bitmasks of the N-particle sector in increasing order.
std::vector<unsigned> sector_masks(int modes, int n_particles);
/// Hamiltonian restricted to the N-particle sector.
Eigen::MatrixXcd sector_hamiltonian(const ManyBodyOperatorSpec& spec,
                                    int n_particles);

struct GroundState {
  double energy;
  FockVector psi;
};

/// Lowest eigenpair of the N-particle block. Throws on an empty sector.
GroundState ground_state(const ManyBodyOperatorSpec& spec, int n_particles);

/// k-particle reduced density matrix of a normalized single-sector state.
/// k = 1: gamma_{mn} = <psi, a*_n a_m psi>  (trace N).
/// k = 2: Gamma_{(mn),(pq)} = <psi, a*_p a*_q a_n a_m psi> on ordered
///        pairs m < n; the 1/2! of the unrestricted kernel is absorbed
///        by the pair ordering, so the trace is binom(N,2).
Eigen::MatrixXcd reduced_density_matrix(const FockVector& psi, int k);

}  // namespace dfta::fock

#endif
