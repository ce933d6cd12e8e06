#include "dftatoms/fockspace.hpp"

#include <bit>
#include <stdexcept>

#include "json.hpp"

namespace dfta::fock {

namespace {

int parity_below(unsigned mask, int mode) {
  const unsigned below = mask & ((1u << mode) - 1u);
  return (std::popcount(below) & 1) ? -1 : 1;
}

}  // namespace

OrbitalBasis::OrbitalBasis(int modes) : modes_(modes) {
  if (modes < 1 || modes > 14)
    throw std::invalid_argument("orbital basis size must be in [1, 14]");
  labels_.reserve(modes);
  for (int m = 0; m < modes; ++m) labels_.push_back("m" + std::to_string(m));
}

FockVector::FockVector(int modes)
    : modes_(modes), amplitudes_(Eigen::VectorXcd::Zero(1u << modes)) {
  if (modes < 1 || modes > 14)
    throw std::invalid_argument("fock vector modes must be in [1, 14]");
}

FockVector::FockVector(int modes, Eigen::VectorXcd amplitudes)
    : modes_(modes), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != static_cast<Eigen::Index>(1u << modes))
    throw std::invalid_argument("fock vector amplitude length mismatch");
}

FockVector FockVector::vacuum(int modes) { return basis_state(modes, 0u); }

FockVector FockVector::basis_state(int modes, unsigned mask) {
  FockVector v(modes);
  v.amplitudes()[mask] = 1.0;
  return v;
}

Complex FockVector::dot(const FockVector& other) const {
  return amplitudes_.dot(other.amplitudes_);
}

double FockVector::sector_weight(int n_particles) const {
  double w = 0.0;
  for (unsigned mask = 0; mask < dim(); ++mask)
    if (std::popcount(mask) == n_particles)
      w += std::norm(amplitudes_[mask]);
  return w;
}

int FockVector::single_sector(double tol) const {
  const double total = amplitudes_.squaredNorm();
  for (int n = 0; n <= modes_; ++n) {
    const double w = sector_weight(n);
    if (w > tol * total) {
      if (w < (1.0 - tol) * total) return -1;
      return n;
    }
  }
  return 0;
}

FockVector annihilate(int mode, const FockVector& psi) {
  if (mode < 0 || mode >= psi.modes())
    throw std::invalid_argument("annihilate: mode out of range");
  FockVector out(psi.modes());
  const unsigned bit = 1u << mode;
  for (unsigned mask = 0; mask < psi.dim(); ++mask) {
    const Complex amp = psi.amplitudes()[mask];
    if (amp == Complex(0.0) || !(mask & bit)) continue;
    out.amplitudes()[mask ^ bit] +=
        static_cast<double>(parity_below(mask, mode)) * amp;
  }
  return out;
}

FockVector create(int mode, const FockVector& psi) {
  if (mode < 0 || mode >= psi.modes())
    throw std::invalid_argument("create: mode out of range");
  FockVector out(psi.modes());
  const unsigned bit = 1u << mode;
  for (unsigned mask = 0; mask < psi.dim(); ++mask) {
    const Complex amp = psi.amplitudes()[mask];
    if (amp == Complex(0.0) || (mask & bit)) continue;
    out.amplitudes()[mask | bit] +=
        static_cast<double>(parity_below(mask, mode)) * amp;
  }
  return out;
}

Eigen::MatrixXcd annihilate_matrix(int modes, int mode) {
  const std::size_t dim = 1u << modes;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  const unsigned bit = 1u << mode;
  for (unsigned mask = 0; mask < dim; ++mask)
    if (mask & bit)
      a(mask ^ bit, mask) = static_cast<double>(parity_below(mask, mode));
  return a;
}

Eigen::MatrixXcd create_matrix(int modes, int mode) {
  return annihilate_matrix(modes, mode).adjoint();
}

ManyBodyOperatorSpec::ManyBodyOperatorSpec(int modes)
    : one_body(Eigen::MatrixXcd::Zero(modes, modes)),
      two_body(modes,
               std::vector<std::vector<std::vector<Complex>>>(
                   modes, std::vector<std::vector<Complex>>(
                              modes, std::vector<Complex>(modes, 0.0)))) {
  if (modes < 1 || modes > 14)
    throw std::invalid_argument("operator spec modes must be in [1, 14]");
}

void ManyBodyOperatorSpec::check_symmetries(double tol) const {
  const int m_count = modes();
  if ((one_body - one_body.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("one-body matrix not Hermitian");
  for (int m = 0; m < m_count; ++m)
    for (int n = 0; n < m_count; ++n)
      for (int p = 0; p < m_count; ++p)
        for (int q = 0; q < m_count; ++q) {
          if (std::abs(w(m, n, p, q) - w(n, m, q, p)) > tol)
            throw std::invalid_argument("two-body pair symmetry violated");
          if (std::abs(std::conj(w(m, n, p, q)) - w(p, q, m, n)) > tol)
            throw std::invalid_argument("two-body Hermiticity violated");
        }
}

ManyBodyOperatorSpec ManyBodyOperatorSpec::from_json_string(
    const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const int m_count = j.at("M").get<int>();
  ManyBodyOperatorSpec spec(m_count);
  const auto& h = j.at("h");
  for (int m = 0; m < m_count; ++m)
    for (int n = 0; n < m_count; ++n)
      spec.one_body(m, n) = h.at(m).at(n).get<double>();
  if (j.contains("W"))
    for (const auto& entry : j.at("W")) {
      const int m = entry.at("m").get<int>();
      const int n = entry.at("n").get<int>();
      const int p = entry.at("p").get<int>();
      const int q = entry.at("q").get<int>();
      const double value = entry.at("value").get<double>();
      spec.w(m, n, p, q) = value;
    }
  spec.check_symmetries();
  return spec;
}

FockVector apply_hamiltonian(const ManyBodyOperatorSpec& spec,
                             const FockVector& psi) {
  const int m_count = spec.modes();
  if (m_count != psi.modes())
    throw std::invalid_argument("apply_hamiltonian: mode count mismatch");
  FockVector out(psi.modes());
  const auto& amps = psi.amplitudes();
  for (unsigned mask = 0; mask < psi.dim(); ++mask) {
    const Complex amp = amps[mask];
    if (amp == Complex(0.0)) continue;
    // One-body: a*_m a_n.
    for (int n = 0; n < m_count; ++n) {
      if (!(mask & (1u << n))) continue;
      const int sn = parity_below(mask, n);
      const unsigned mask1 = mask ^ (1u << n);
      for (int m = 0; m < m_count; ++m) {
        if (spec.one_body(m, n) == Complex(0.0)) continue;
        if (mask1 & (1u << m)) continue;
        const int sm = parity_below(mask1, m);
        out.amplitudes()[mask1 | (1u << m)] +=
            spec.one_body(m, n) * static_cast<double>(sn * sm) * amp;
      }
    }
    // Two-body: 1/2 W_{mnpq} a*_m a*_n a_q a_p.
    for (int p = 0; p < m_count; ++p) {
      if (!(mask & (1u << p))) continue;
      const int sp = parity_below(mask, p);
      const unsigned mask_p = mask ^ (1u << p);
      for (int q = 0; q < m_count; ++q) {
        if (!(mask_p & (1u << q))) continue;
        const int sq = parity_below(mask_p, q);
        const unsigned mask_pq = mask_p ^ (1u << q);
        for (int n = 0; n < m_count; ++n) {
          if (mask_pq & (1u << n)) continue;
          const int sn = parity_below(mask_pq, n);
          const unsigned mask_n = mask_pq | (1u << n);
          for (int m = 0; m < m_count; ++m) {
            if (mask_n & (1u << m)) continue;
            const Complex wc = spec.w(m, n, p, q);
            if (wc == Complex(0.0)) continue;
            const int sm = parity_below(mask_n, m);
            out.amplitudes()[mask_n | (1u << m)] +=
                0.5 * wc * static_cast<double>(sp * sq * sn * sm) * amp;
          }
        }
      }
    }
  }
  return out;
}

Eigen::MatrixXcd assemble_hamiltonian(const ManyBodyOperatorSpec& spec) {
  if (spec.modes() > 12)
    throw std::invalid_argument("dense Hamiltonian limited to 12 modes");
  spec.check_symmetries();
  const std::size_t dim = 1u << spec.modes();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (unsigned col = 0; col < dim; ++col) {
    auto image =
        apply_hamiltonian(spec, FockVector::basis_state(spec.modes(), col));
    h.col(col) = image.amplitudes();
  }
  return h;
}

std::vector<unsigned> sector_masks(int modes, int n_particles) {
  std::vector<unsigned> masks;
  for (unsigned mask = 0; mask < (1u << modes); ++mask)
    if (std::popcount(mask) == n_particles) masks.push_back(mask);
  return masks;
}

Eigen::MatrixXcd sector_hamiltonian(const ManyBodyOperatorSpec& spec,
                                    int n_particles) {
  const auto masks = sector_masks(spec.modes(), n_particles);
  if (masks.empty()) throw std::invalid_argument("empty particle sector");
  std::vector<int> index(1u << spec.modes(), -1);
  for (std::size_t i = 0; i < masks.size(); ++i) index[masks[i]] = static_cast<int>(i);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(masks.size(), masks.size());
  for (std::size_t col = 0; col < masks.size(); ++col) {
    auto image = apply_hamiltonian(
        spec, FockVector::basis_state(spec.modes(), masks[col]));
    for (unsigned mask = 0; mask < image.dim(); ++mask) {
      const Complex amp = image.amplitudes()[mask];
      if (amp != Complex(0.0)) {
        if (index[mask] < 0)
          throw std::logic_error("hamiltonian left the particle sector");
        h(index[mask], col) = amp;
      }
    }
  }
  return h;
}

GroundState ground_state(const ManyBodyOperatorSpec& spec, int n_particles) {
  if (n_particles < 0 || n_particles > spec.modes())
    throw std::invalid_argument("ground_state: empty sector");
  const auto masks = sector_masks(spec.modes(), n_particles);
  const auto h = sector_hamiltonian(spec, n_particles);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("ground_state: eigensolver failed");
  FockVector psi(spec.modes());
  const auto v = es.eigenvectors().col(0);
  for (std::size_t i = 0; i < masks.size(); ++i)
    psi.amplitudes()[masks[i]] = v[i];
  return {es.eigenvalues()[0], std::move(psi)};
}

Eigen::MatrixXcd reduced_density_matrix(const FockVector& psi, int k) {
  if (k != 1 && k != 2)
    throw std::invalid_argument("reduced_density_matrix: k must be 1 or 2");
  const double nrm = psi.norm();
  if (std::abs(nrm - 1.0) > 1e-10)
    throw std::invalid_argument("reduced_density_matrix: psi not normalized");
  const int sector = psi.single_sector();
  if (sector < 0)
    throw std::invalid_argument(
        "reduced_density_matrix: state spreads over several sectors");
  if (sector < k)
    throw std::invalid_argument("reduced_density_matrix: sector below k");
  const int m_count = psi.modes();
  if (k == 1) {
    Eigen::MatrixXcd gamma(m_count, m_count);
    std::vector<FockVector> a_psi;
    a_psi.reserve(m_count);
    for (int m = 0; m < m_count; ++m) a_psi.push_back(annihilate(m, psi));
    for (int m = 0; m < m_count; ++m)
      for (int n = 0; n < m_count; ++n)
        gamma(m, n) = a_psi[n].dot(a_psi[m]);  // <psi, a*_n a_m psi>
    return gamma;
  }
  // k == 2 on ordered pairs m < n: Gamma_{(mn),(pq)} = <a*_p a*_q a_n a_m>.
  // This is the 1/2! kernel with the pair duplication absorbed, so the
  // trace over ordered pairs is binom(N,2).
  std::vector<std::pair<int, int>> pairs;
  for (int m = 0; m < m_count; ++m)
    for (int n = m + 1; n < m_count; ++n) pairs.emplace_back(m, n);
  std::vector<FockVector> aa;
  aa.reserve(pairs.size());
  for (auto [m, n] : pairs) aa.push_back(annihilate(n, annihilate(m, psi)));
  Eigen::MatrixXcd gamma2(pairs.size(), pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j)
      gamma2(i, j) = aa[j].dot(aa[i]);
  return gamma2;
}

}  // namespace dfta::fock
