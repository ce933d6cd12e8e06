#include "dftatoms/dmf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dftatoms/bathtub.hpp"
#include "dftatoms/rng.hpp"

namespace dfta::dmf {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols())
    throw std::invalid_argument("density matrix must be square");
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("density matrix must be Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix_);
  occupations_ = es.eigenvalues();
  orbitals_ = es.eigenvectors();
  for (int i = 0; i < occupations_.size(); ++i) {
    if (occupations_[i] < -1e-10 || occupations_[i] > 1.0 + 1e-10)
      throw std::invalid_argument("density matrix eigenvalues outside [0,1]");
    occupations_[i] = std::clamp(occupations_[i], 0.0, 1.0);
  }
}

Eigen::MatrixXcd DensityMatrix::sqrt() const {
  Eigen::VectorXd roots(occupations_.size());
  for (int i = 0; i < roots.size(); ++i) roots[i] = std::sqrt(occupations_[i]);
  return orbitals_ * roots.asDiagonal() * orbitals_.adjoint();
}

bool DensityMatrix::is_projection(double tol) const {
  for (int i = 0; i < occupations_.size(); ++i)
    if (std::min(occupations_[i], 1.0 - occupations_[i]) > tol) return false;
  return true;
}

Eigen::MatrixXcd TwoBodyProblem::direct_map(
    const Eigen::MatrixXcd& gamma) const {
  const int m_count = size();
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(m_count, m_count);
  for (int m = 0; m < m_count; ++m)
    for (int p = 0; p < m_count; ++p) {
      Complex acc = 0.0;
      for (int n = 0; n < m_count; ++n)
        for (int q = 0; q < m_count; ++q)
          acc += spec.w(m, n, p, q) * gamma(q, n);
      j(m, p) = acc;
    }
  return j;
}

Eigen::MatrixXcd TwoBodyProblem::exchange_map(
    const Eigen::MatrixXcd& gamma) const {
  const int m_count = size();
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(m_count, m_count);
  for (int m = 0; m < m_count; ++m)
    for (int q = 0; q < m_count; ++q) {
      Complex acc = 0.0;
      for (int n = 0; n < m_count; ++n)
        for (int p = 0; p < m_count; ++p)
          acc += spec.w(m, n, p, q) * gamma(p, n);
      k(m, q) = acc;
    }
  return k;
}

double TwoBodyProblem::direct_energy(const Eigen::MatrixXcd& gamma) const {
  return 0.5 * (gamma * direct_map(gamma)).trace().real();
}

double TwoBodyProblem::exchange_energy(const Eigen::MatrixXcd& gamma) const {
  return 0.5 * (gamma * exchange_map(gamma)).trace().real();
}

double hf_energy(const DensityMatrix& gamma, const TwoBodyProblem& prob) {
  if (gamma.size() != prob.size())
    throw std::invalid_argument("hf_energy: dimension mismatch");
  const auto& g = gamma.matrix();
  return (prob.spec.one_body * g).trace().real() + prob.direct_energy(g) -
         prob.exchange_energy(g);
}

double muller_energy(const DensityMatrix& gamma, const TwoBodyProblem& prob) {
  if (gamma.size() != prob.size())
    throw std::invalid_argument("muller_energy: dimension mismatch");
  const auto& g = gamma.matrix();
  return (prob.spec.one_body * g).trace().real() + prob.direct_energy(g) -
         prob.exchange_energy(gamma.sqrt());
}

Eigen::MatrixXcd fock_operator(const DensityMatrix& gamma,
                               const TwoBodyProblem& prob) {
  if (gamma.size() != prob.size())
    throw std::invalid_argument("fock_operator: dimension mismatch");
  return prob.spec.one_body + prob.direct_map(gamma.matrix()) -
         prob.exchange_map(gamma.matrix());
}

Eigen::MatrixXcd muller_gradient(const DensityMatrix& gamma,
                                 const TwoBodyProblem& prob) {
  const auto& u = gamma.natural_orbitals();
  const auto& lam = gamma.occupations();
  const Eigen::MatrixXcd root = gamma.sqrt();
  const Eigen::MatrixXcd k_tilde =
      u.adjoint() * prob.exchange_map(root) * u;
  const int m_count = gamma.size();
  Eigen::MatrixXcd grad_x = Eigen::MatrixXcd::Zero(m_count, m_count);
  const double floor = 1e-12;
  for (int i = 0; i < m_count; ++i)
    for (int j = 0; j < m_count; ++j) {
      const double li = std::max(lam[i], floor);
      const double lj = std::max(lam[j], floor);
      // Divided difference of sqrt: (sqrt(li)-sqrt(lj))/(li-lj).
      const double dd = 1.0 / (std::sqrt(li) + std::sqrt(lj));
      grad_x(i, j) = k_tilde(i, j) * dd;
    }
  const Eigen::MatrixXcd exchange_grad = u * grad_x * u.adjoint();
  return prob.spec.one_body + prob.direct_map(gamma.matrix()) - exchange_grad;
}

namespace {

DensityMatrix project_feasible(const Eigen::MatrixXcd& candidate,
                               double trace) {
  Eigen::MatrixXcd herm = 0.5 * (candidate + candidate.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
  std::vector<double> lam(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  auto projected = project_capped_simplex(lam, 1.0, trace);
  Eigen::VectorXd occ(projected.size());
  for (std::size_t i = 0; i < projected.size(); ++i) occ[i] = projected[i];
  return DensityMatrix(es.eigenvectors() * occ.asDiagonal() *
                       es.eigenvectors().adjoint());
}

double energy_of(const DensityMatrix& g, const TwoBodyProblem& prob,
                 Functional f) {
  return f == Functional::hf ? hf_energy(g, prob) : muller_energy(g, prob);
}

Eigen::MatrixXcd gradient_of(const DensityMatrix& g,
                             const TwoBodyProblem& prob, Functional f) {
  return f == Functional::hf ? fock_operator(g, prob)
                             : muller_gradient(g, prob);
}

// Push interior eigenvalues of an HF iterate to {0,1} along the
// energy-lowering two-eigenvalue exchange direction.
DensityMatrix projectionize_hf(DensityMatrix gamma,
                               const TwoBodyProblem& prob) {
  for (int round = 0; round < 4 * gamma.size(); ++round) {
    const auto& lam = gamma.occupations();
    int i1 = -1, i2 = -1;
    for (int i = 0; i < lam.size(); ++i)
      if (lam[i] > 1e-10 && lam[i] < 1.0 - 1e-10) {
        if (i1 < 0)
          i1 = i;
        else {
          i2 = i;
          break;
        }
      }
    if (i1 < 0 || i2 < 0) break;
    const auto& u = gamma.natural_orbitals();
    const Eigen::MatrixXcd delta =
        u.col(i1) * u.col(i1).adjoint() - u.col(i2) * u.col(i2).adjoint();
    const Eigen::MatrixXcd f = fock_operator(gamma, prob);
    const double slope = (f * delta).trace().real();
    // The quadratic coefficient D[rho_delta] - X[delta] is negative, so
    // moving along -sign(slope) with the largest feasible step lowers
    // the energy.
    double eps;
    if (slope <= 0.0)
      eps = std::min(1.0 - gamma.occupations()[i1], gamma.occupations()[i2]);
    else
      eps = -std::min(gamma.occupations()[i1], 1.0 - gamma.occupations()[i2]);
    Eigen::MatrixXcd next = gamma.matrix() + eps * delta;
    gamma = project_feasible(next, gamma.trace());
  }
  return gamma;
}

}  // namespace

MinimizeResult minimize_dmf(const TwoBodyProblem& prob, int n_electrons,
                            Functional functional,
                            const MinimizeOptions& opt) {
  if (n_electrons < 0 || n_electrons > prob.size())
    throw std::invalid_argument("minimize_dmf: N outside [0, M]");
  prob.spec.check_symmetries();

  MinimizeResult best{DensityMatrix(Eigen::MatrixXcd::Zero(prob.size(),
                                                           prob.size())),
                      1e300, 1e300, 0, false};
  bool have_best = false;

  for (int restart = 0; restart < opt.restarts; ++restart) {
    DensityMatrix gamma = restart == 0
                              ? project_feasible(-prob.spec.one_body,
                                                 n_electrons)
                              : random_density_matrix(
                                    prob.size(), n_electrons,
                                    opt.seed + 977u * restart);
    double energy = energy_of(gamma, prob, functional);
    double step = 1.0;
    double pg_norm = 1e300;
    int iter = 0;
    for (; iter < opt.max_iterations; ++iter) {
      const Eigen::MatrixXcd grad = gradient_of(gamma, prob, functional);
      // Projected-gradient stationarity measure at a fixed probe step.
      const DensityMatrix probe =
          project_feasible(gamma.matrix() - 0.1 * grad, n_electrons);
      pg_norm = (probe.matrix() - gamma.matrix()).norm() / 0.1;
      if (pg_norm < opt.tol) break;
      bool moved = false;
      for (int backtrack = 0; backtrack < 40; ++backtrack) {
        const DensityMatrix trial =
            project_feasible(gamma.matrix() - step * grad, n_electrons);
        const double trial_energy = energy_of(trial, prob, functional);
        if (trial_energy <
            energy - 1e-14 * (1.0 + std::abs(energy))) {
          gamma = trial;
          energy = trial_energy;
          step = std::min(step * 1.3, 1e2);
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;  // stationary within line-search resolution
    }
    if (functional == Functional::hf) {
      DensityMatrix pushed = projectionize_hf(gamma, prob);
      const double pushed_energy = energy_of(pushed, prob, functional);
      if (pushed_energy <= energy + 1e-12 * (1.0 + std::abs(energy))) {
        gamma = std::move(pushed);
        energy = pushed_energy;
        const Eigen::MatrixXcd grad = gradient_of(gamma, prob, functional);
        const DensityMatrix probe =
            project_feasible(gamma.matrix() - 0.1 * grad, n_electrons);
        pg_norm = (probe.matrix() - gamma.matrix()).norm() / 0.1;
      }
    }
    // A stalled line search means the iterate is stationary at floating
    // point resolution even if the probe norm sits above tol.
    const bool converged = pg_norm < opt.tol || iter < opt.max_iterations;
    if (!have_best || energy < best.energy) {
      best = MinimizeResult{std::move(gamma), energy, pg_norm, iter,
                            converged};
      have_best = true;
    }
  }
  if (!best.converged)
    throw std::runtime_error("minimize_dmf: descent did not converge");
  return best;
}

TwoBodyProblem radial_s_channel_problem(int modes, double z,
                                        std::size_t grid_points,
                                        double r_max) {
  // Uniform radial grid, Dirichlet ends; s-wave Hamiltonian on u(r).
  const double h = r_max / static_cast<double>(grid_points + 1);
  const int n = static_cast<int>(grid_points);
  Eigen::MatrixXd hmat = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double r = h * (i + 1);
    hmat(i, i) = 1.0 / (h * h) - z / r;
    if (i + 1 < n) {
      hmat(i, i + 1) = -0.5 / (h * h);
      hmat(i + 1, i) = -0.5 / (h * h);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hmat);
  // Orthonormal w.r.t. sum_i u(r_i)^2 h = 1.
  Eigen::MatrixXd orbitals = es.eigenvectors().leftCols(modes) / std::sqrt(h);

  fock::ManyBodyOperatorSpec spec(modes);
  for (int a = 0; a < modes; ++a) spec.one_body(a, a) = es.eigenvalues()[a];

  // W_{mnpq} = int int chi_m(r) chi_n(s) chi_p(r) chi_q(s) / max(r,s).
  // Pair products P_{mp}(r) = chi_m chi_p contracted with the kernel.
  std::vector<double> r(n);
  for (int i = 0; i < n; ++i) r[i] = h * (i + 1);
  for (int m = 0; m < modes; ++m)
    for (int p = 0; p < modes; ++p) {
      // k_{mp}(s) = int chi_m(r) chi_p(r) / max(r,s) dr via prefix sums.
      std::vector<double> prod(n);
      for (int i = 0; i < n; ++i) prod[i] = orbitals(i, m) * orbitals(i, p);
      std::vector<double> pref(n), pref_over(n);
      double acc = 0.0, acc_over = 0.0;
      for (int i = 0; i < n; ++i) {
        acc += prod[i] * h;
        acc_over += prod[i] / r[i] * h;
        pref[i] = acc;
        pref_over[i] = acc_over;
      }
      for (int q = 0; q < modes; ++q)
        for (int u = 0; u < modes; ++u) {
          double w = 0.0;
          for (int i = 0; i < n; ++i) {
            const double kernel =
                pref[i] / r[i] + (acc_over - pref_over[i]);
            w += orbitals(i, q) * orbitals(i, u) * kernel * h;
          }
          spec.w(m, q, p, u) = w;
        }
    }
  return TwoBodyProblem(std::move(spec), true);
}

TwoBodyProblem random_problem(int modes, std::uint64_t seed, bool psd) {
  Rng rng(seed);
  fock::ManyBodyOperatorSpec spec(modes);
  for (int m = 0; m < modes; ++m) {
    spec.one_body(m, m) = rng.normal();
    for (int n = m + 1; n < modes; ++n) {
      const Complex v(0.5 * rng.normal(), 0.5 * rng.normal());
      spec.one_body(m, n) = v;
      spec.one_body(n, m) = std::conj(v);
    }
  }
  if (psd) {
    // W_{mnpq} = sum_{xy} conj(chi_m(x)) chi_p(x) w(x,y) conj(chi_n(y)) chi_q(y)
    // with a psd weight matrix w, so the exchange form X[A] is >= 0 for
    // Hermitian A.
    const int points = 2 * modes;
    Eigen::MatrixXcd chi(points, modes);
    for (int x = 0; x < points; ++x)
      for (int m = 0; m < modes; ++m)
        chi(x, m) = Complex(rng.normal(), rng.normal());
    Eigen::MatrixXd factor(points, points);
    for (int x = 0; x < points; ++x)
      for (int y = 0; y < points; ++y) factor(x, y) = rng.normal();
    Eigen::MatrixXd w = factor * factor.transpose() / points;
    for (int m = 0; m < modes; ++m)
      for (int n = 0; n < modes; ++n)
        for (int p = 0; p < modes; ++p)
          for (int q = 0; q < modes; ++q) {
            Complex acc = 0.0;
            for (int x = 0; x < points; ++x)
              for (int y = 0; y < points; ++y)
                acc += std::conj(chi(x, m)) * chi(x, p) * w(x, y) *
                       std::conj(chi(y, n)) * chi(y, q);
            spec.w(m, n, p, q) = acc / static_cast<double>(points);
          }
  } else {
    // Random Hermitian pair tensor without positivity.
    for (int m = 0; m < modes; ++m)
      for (int n = 0; n < modes; ++n)
        for (int p = 0; p < modes; ++p)
          for (int q = 0; q < modes; ++q) {
            if (spec.w(m, n, p, q) != Complex(0.0)) continue;
            const Complex v(0.3 * rng.normal(), 0.3 * rng.normal());
            spec.w(m, n, p, q) += v;
            spec.w(n, m, q, p) += v;
            spec.w(p, q, m, n) += std::conj(v);
            spec.w(q, p, n, m) += std::conj(v);
          }
  }
  spec.check_symmetries(1e-9);
  return TwoBodyProblem(std::move(spec), psd);
}

DensityMatrix random_density_matrix(int modes, double trace,
                                    std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXcd a(modes, modes);
  for (int i = 0; i < modes; ++i)
    for (int j = 0; j < modes; ++j)
      a(i, j) = Complex(rng.normal(), rng.normal());
  Eigen::MatrixXcd herm = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
  std::vector<double> lam(modes);
  for (int i = 0; i < modes; ++i) lam[i] = rng.uniform();
  auto occ = project_capped_simplex(lam, 1.0, trace);
  Eigen::VectorXd v(modes);
  for (int i = 0; i < modes; ++i) v[i] = occ[i];
  return DensityMatrix(es.eigenvectors() * v.asDiagonal() *
                       es.eigenvectors().adjoint());
}

}  // namespace dfta::dmf
