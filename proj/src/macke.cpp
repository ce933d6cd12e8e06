#include "dftatoms/macke.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dftatoms/constants.hpp"

namespace dfta::macke {

namespace {

constexpr double two_pi = 2.0 * pi;

// 4th-order first derivative on a uniform grid.
std::vector<double> derivative_uniform(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  std::vector<double> d(n);
  auto at = [&](std::size_t c, std::initializer_list<int> off,
                std::initializer_list<double> coef) {
    double s = 0.0;
    auto o = off.begin();
    auto k = coef.begin();
    for (; o != off.end(); ++o, ++k) s += *k * f[c + *o];
    return s / h;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= 2 && i + 2 < n)
      d[i] = at(i, {-2, -1, 0, 1, 2},
                {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12});
    else if (i == 0)
      d[i] = at(0, {0, 1, 2, 3, 4}, {-25.0 / 12, 4.0, -3.0, 4.0 / 3, -0.25});
    else if (i == 1)
      d[i] = at(1, {-1, 0, 1, 2, 3}, {-0.25, -5.0 / 6, 1.5, -0.5, 1.0 / 12});
    else if (i == n - 2)
      d[i] = -at(i, {1, 0, -1, -2, -3}, {-0.25, -5.0 / 6, 1.5, -0.5, 1.0 / 12});
    else
      d[i] = -at(i, {0, -1, -2, -3, -4},
                 {-25.0 / 12, 4.0, -3.0, 4.0 / 3, -0.25});
  }
  return d;
}

template <typename Value>
std::vector<double> complex_derivative_sq(const std::vector<Value>& f,
                                          double h) {
  const std::size_t n = f.size();
  std::vector<double> re(n), im(n);
  for (std::size_t i = 0; i < n; ++i) {
    re[i] = f[i].real();
    im[i] = f[i].imag();
  }
  auto dre = derivative_uniform(re, h);
  auto dim = derivative_uniform(im, h);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = dre[i] * dre[i] + dim[i] * dim[i];
  return out;
}

int integral_mass(double mass) {
  const double rounded = std::round(mass);
  if (rounded < 0.5 || std::abs(mass - rounded) > 1e-6)
    throw std::invalid_argument("macke: density mass is not a positive integer");
  return static_cast<int>(rounded);
}

}  // namespace

LineGrid LineGrid::uniform(std::size_t n, double a, double b) {
  LineGrid g;
  g.h = (b - a) / static_cast<double>(n - 1);
  g.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    g.nodes[i] = a + g.h * static_cast<double>(i);
  g.weights = interpolatory_line_weights(g.nodes);
  return g;
}

double LineGrid::integrate(const std::vector<double>& samples) const {
  if (samples.size() != nodes.size())
    throw std::invalid_argument("line grid: sample length mismatch");
  long double acc = 0.0L;
  for (std::size_t i = 0; i < samples.size(); ++i)
    acc += static_cast<long double>(weights[i]) * samples[i];
  return static_cast<double>(acc);
}

std::vector<double> LineGrid::cumulative(
    const std::vector<double>& samples) const {
  return interpolatory_line_prefix(nodes, samples);
}

std::vector<double> LineGrid::derivative(
    const std::vector<double>& samples) const {
  return derivative_uniform(samples, h);
}

OrbitalSet1d::OrbitalSet1d(LineGrid grid, std::vector<double> density,
                           double a)
    : grid_(std::move(grid)), a_(a) {
  const double mass = grid_.integrate(density);
  n_ = integral_mass(mass);
  const std::size_t sz = grid_.size();
  amp_.resize(sz);
  std::vector<double> scaled(sz);
  for (std::size_t i = 0; i < sz; ++i) {
    if (density[i] < 0.0)
      throw std::invalid_argument("macke: density must be >= 0");
    scaled[i] = density[i] / static_cast<double>(n_);
    amp_[i] = std::sqrt(scaled[i]);
  }
  y_ = grid_.cumulative(scaled);
  // Clamp roundoff so Y stays inside [0, 1].
  for (auto& y : y_) y = std::clamp(y, 0.0, 1.0);
}

Complex OrbitalSet1d::value(int orbital, std::size_t node) const {
  const double phase = two_pi * (static_cast<double>(orbital + 1) - a_) *
                       y_[node];
  return amp_[node] * Complex(std::cos(phase), std::sin(phase));
}

std::vector<Complex> OrbitalSet1d::orbital(int k) const {
  std::vector<Complex> out(grid_.size());
  for (std::size_t i = 0; i < grid_.size(); ++i) out[i] = value(k, i);
  return out;
}

Eigen::MatrixXcd OrbitalSet1d::gram() const {
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n_, n_);
  // <phi_m, phi_n> = int (rho/N) exp(i 2 pi (n - m) Y); accumulate per
  // frequency difference.
  for (int m = 0; m < n_; ++m)
    for (int n = m; n < n_; ++n) {
      long double re = 0.0L, im = 0.0L;
      const double freq = two_pi * static_cast<double>(n - m);
      for (std::size_t i = 0; i < grid_.size(); ++i) {
        const double w = grid_.weights[i] * amp_[i] * amp_[i];
        re += w * std::cos(freq * y_[i]);
        im += w * std::sin(freq * y_[i]);
      }
      g(m, n) = Complex(static_cast<double>(re), static_cast<double>(im));
      g(n, m) = std::conj(g(m, n));
    }
  return g;
}

std::vector<double> OrbitalSet1d::density() const {
  std::vector<double> rho(grid_.size());
  for (std::size_t i = 0; i < grid_.size(); ++i)
    rho[i] = static_cast<double>(n_) * amp_[i] * amp_[i];
  return rho;
}

double OrbitalSet1d::slater_kinetic() const {
  double total = 0.0;
  for (int k = 0; k < n_; ++k) {
    auto sq = complex_derivative_sq(orbital(k), grid_.h);
    total += 0.5 * grid_.integrate(sq);
  }
  return total;
}

OrbitalSet1d macke_orbitals_1d(const LineGrid& grid,
                               const std::vector<double>& rho, double a) {
  return OrbitalSet1d(grid, rho, a);
}

double kinetic_upper_bound_1d(const LineGrid& grid,
                              const std::vector<double>& rho,
                              int n_particles) {
  if (n_particles < 1)
    throw std::invalid_argument("kinetic_upper_bound_1d: N >= 1 required");
  std::vector<double> sqrt_rho(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) sqrt_rho[i] = std::sqrt(rho[i]);
  auto d = grid.derivative(sqrt_rho);
  const double nn = static_cast<double>(n_particles);
  std::vector<double> integrand(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i)
    integrand[i] = d[i] * d[i] + (pi * pi / 3.0) * (1.0 - 1.0 / (nn * nn)) *
                                     rho[i] * rho[i] * rho[i];
  return 0.5 * grid.integrate(integrand);
}

std::pair<double, double> optimal_phase_1d(const LineGrid& grid,
                                           const std::vector<double>& rho) {
  OrbitalSet1d probe(grid, rho, 0.0);
  const int n = probe.particle_count();
  auto kinetic_at = [&](double a) {
    return OrbitalSet1d(grid, rho, a).slater_kinetic();
  };
  // The kinetic energy is a quadratic in a with minimum inside [0, n+1].
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.0, hi = static_cast<double>(n + 1);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = kinetic_at(x1), f2 = kinetic_at(x2);
  // The kinetic energy is quadratic in a with O(1) curvature, so a
  // 1e-5 bracket leaves errors far below the 1e-6 comparisons.
  for (int iter = 0; iter < 60 && hi - lo > 1e-5; ++iter) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = kinetic_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = kinetic_at(x2);
    }
  }
  const double a = 0.5 * (lo + hi);
  return {a, kinetic_at(a)};
}

// --- 2D --------------------------------------------------------------------

OrbitalSet2d::OrbitalSet2d(TensorGrid2d grid, std::vector<double> density,
                           std::vector<std::array<int, 2>> indices,
                           std::array<double, 2> a)
    : grid_(std::move(grid)), indices_(std::move(indices)), a_(a) {
  const std::size_t nx = grid_.x.size(), ny = grid_.y.size();
  if (density.size() != nx * ny)
    throw std::invalid_argument("macke 2d: density size mismatch");
  // Row masses m(y_j) and the particle number.
  std::vector<double> row_mass(ny);
  std::vector<double> row(nx);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      if (density[j * nx + i] < 0.0)
        throw std::invalid_argument("macke 2d: density must be >= 0");
      row[i] = density[j * nx + i];
    }
    row_mass[j] = grid_.x.integrate(row);
  }
  const double mass = grid_.y.integrate(row_mass);
  const int n = integral_mass(mass);
  if (static_cast<int>(indices_.size()) != n)
    throw std::invalid_argument("macke 2d: need one index tuple per particle");

  // Interior all-zero slices make the conditional CDF undefined.
  std::size_t first = ny, last = 0;
  for (std::size_t j = 0; j < ny; ++j)
    if (row_mass[j] > 0.0) {
      first = std::min(first, j);
      last = std::max(last, j);
    }
  for (std::size_t j = first; j <= last && first < ny; ++j)
    if (row_mass[j] <= 0.0)
      throw std::domain_error("macke 2d: zero marginal slice inside support");

  rho_over_n_.resize(nx * ny);
  for (std::size_t k = 0; k < rho_over_n_.size(); ++k)
    rho_over_n_[k] = density[k] / static_cast<double>(n);

  cond_cdf_.assign(nx * ny, 0.0);
  for (std::size_t j = 0; j < ny; ++j) {
    if (row_mass[j] <= 0.0) continue;
    for (std::size_t i = 0; i < nx; ++i) row[i] = density[j * nx + i];
    auto cum = grid_.x.cumulative(row);
    for (std::size_t i = 0; i < nx; ++i)
      cond_cdf_[j * nx + i] = std::clamp(cum[i] / row_mass[j], 0.0, 1.0);
  }
  auto marg = grid_.y.cumulative(row_mass);
  marg_cdf_.resize(ny);
  for (std::size_t j = 0; j < ny; ++j)
    marg_cdf_[j] = std::clamp(marg[j] / mass, 0.0, 1.0);
}

Complex OrbitalSet2d::value(int orbital, std::size_t ix, std::size_t iy) const {
  const std::size_t nx = grid_.x.size();
  const auto& n = indices_[orbital];
  const double phase =
      two_pi * ((n[0] - a_[0]) * cond_cdf_[iy * nx + ix] +
                (n[1] - a_[1]) * marg_cdf_[iy]);
  return std::sqrt(rho_over_n_[iy * nx + ix]) *
         Complex(std::cos(phase), std::sin(phase));
}

Eigen::MatrixXcd OrbitalSet2d::gram() const {
  const int n = particle_count();
  const std::size_t nx = grid_.x.size(), ny = grid_.y.size();
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
  std::vector<Complex> z(n);
  for (std::size_t j = 0; j < ny; ++j) {
    const double wy = grid_.y.weights[j];
    for (std::size_t i = 0; i < nx; ++i) {
      const double cell = rho_over_n_[j * nx + i];
      if (cell == 0.0) continue;
      const double w = wy * grid_.x.weights[i] * cell;
      const double f = cond_cdf_[j * nx + i], gm = marg_cdf_[j];
      for (int k = 0; k < n; ++k) {
        const double phase = two_pi * ((indices_[k][0] - a_[0]) * f +
                                       (indices_[k][1] - a_[1]) * gm);
        z[k] = Complex(std::cos(phase), std::sin(phase));
      }
      for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) g(p, q) += w * std::conj(z[p]) * z[q];
    }
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < p; ++q) g(p, q) = std::conj(g(q, p));
  return g;
}

std::vector<double> OrbitalSet2d::density() const {
  std::vector<double> rho(rho_over_n_.size());
  for (std::size_t k = 0; k < rho.size(); ++k)
    rho[k] = rho_over_n_[k] * particle_count();
  return rho;
}

std::vector<double> OrbitalSet2d::det_jacobian() const {
  const std::size_t nx = grid_.x.size(), ny = grid_.y.size();
  std::vector<double> det(nx * ny, 0.0);
  auto dg = grid_.y.derivative(marg_cdf_);
  std::vector<double> frow(nx);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) frow[i] = cond_cdf_[j * nx + i];
    auto df = grid_.x.derivative(frow);
    for (std::size_t i = 0; i < nx; ++i) det[j * nx + i] = df[i] * dg[j];
  }
  return det;
}

OrbitalSet2d macke_orbitals_2d(const TensorGrid2d& grid,
                               const std::vector<double>& rho,
                               const std::vector<std::array<int, 2>>& indices,
                               std::array<double, 2> a) {
  return OrbitalSet2d(grid, rho, indices, a);
}

// --- Radial ------------------------------------------------------------------

RadialOrbitalSet::RadialOrbitalSet(RadialGrid grid, std::vector<Block> blocks)
    : grid_(std::move(grid)), blocks_(std::move(blocks)) {}

Complex RadialOrbitalSet::value(const Block& block, int orbital,
                                std::size_t node) const {
  const double phase = two_pi *
                       (static_cast<double>(orbital + 1) - block.a) *
                       block.y[node];
  return block.amp[node] * Complex(std::cos(phase), std::sin(phase));
}

Eigen::MatrixXcd RadialOrbitalSet::block_gram(const Block& block) const {
  const int n = block.occ.count;
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
  for (int m = 0; m < n; ++m)
    for (int k = m; k < n; ++k) {
      long double re = 0.0L, im = 0.0L;
      const double freq = two_pi * static_cast<double>(k - m);
      for (std::size_t i = 0; i < grid_.size(); ++i) {
        const double w =
            grid_.weights()[i] * block.amp[i] * block.amp[i];
        re += w * std::cos(freq * block.y[i]);
        im += w * std::sin(freq * block.y[i]);
      }
      g(m, k) = Complex(static_cast<double>(re), static_cast<double>(im));
      g(k, m) = std::conj(g(m, k));
    }
  return g;
}

std::vector<double> RadialOrbitalSet::channel_density(int l) const {
  std::vector<double> rho(grid_.size(), 0.0);
  for (const auto& block : blocks_) {
    if (block.occ.l != l) continue;
    for (std::size_t i = 0; i < grid_.size(); ++i)
      rho[i] += block.occ.count * block.amp[i] * block.amp[i];
  }
  return rho;
}

double RadialOrbitalSet::block_kinetic(const Block& block) const {
  const auto& r = grid_.nodes();
  const double ll = static_cast<double>(block.occ.l) * (block.occ.l + 1.0);
  double total = 0.0;
  for (int k = 0; k < block.occ.count; ++k) {
    std::vector<double> re(grid_.size()), im(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      const Complex u = value(block, k, i);
      re[i] = u.real();
      im[i] = u.imag();
    }
    auto dre = radial_derivative(grid_, re);
    auto dim = radial_derivative(grid_, im);
    std::vector<double> integrand(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      const double u2 = re[i] * re[i] + im[i] * im[i];
      integrand[i] =
          dre[i] * dre[i] + dim[i] * dim[i] + ll * u2 / (r[i] * r[i]);
    }
    total += 0.5 * integrate_radial(grid_, integrand);
  }
  return total;
}

RadialOrbitalSet radial_macke(const tfw::ChannelDensities& channels,
                              const std::vector<ChannelOccupation>& occupations,
                              const std::vector<double>& a_l) {
  const auto& grid = channels.grid();
  // Channel mass must match the number of orbitals placed in it.
  std::vector<int> channel_counts(channels.channel_count(), 0);
  for (const auto& occ : occupations) {
    if (occ.l < 0 || occ.l >= static_cast<int>(channels.channel_count()))
      throw std::invalid_argument("radial_macke: channel out of range");
    if (occ.count <= 0)
      throw std::invalid_argument("radial_macke: occupation must be positive");
    channel_counts[occ.l] += occ.count;
  }
  for (std::size_t l = 0; l < channels.channel_count(); ++l) {
    const double mass = channels.channel_mass(l);
    if (channel_counts[l] > 0 && mass <= 0.0)
      throw std::domain_error(
          "radial_macke: zero-mass channel with nonzero occupation");
    if (channel_counts[l] > 0 &&
        std::abs(mass - channel_counts[l]) > 1e-6 * channel_counts[l])
      throw std::invalid_argument(
          "radial_macke: channel mass must equal its occupation count");
  }
  std::vector<RadialOrbitalSet::Block> blocks;
  for (const auto& occ : occupations) {
    const auto& rho = channels.channels()[occ.l];
    const double mass = channels.channel_mass(occ.l);
    std::vector<double> scaled(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) scaled[i] = rho[i] / mass;
    auto y = cumulative_integral(grid, scaled);
    std::vector<double> amp(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) {
      y[i] = std::clamp(y[i], 0.0, 1.0);
      amp[i] = std::sqrt(scaled[i]);
    }
    RadialOrbitalSet::Block block;
    block.occ = occ;
    block.a = a_l.at(occ.l);
    block.amp = std::move(amp);
    block.y = std::move(y);
    blocks.push_back(std::move(block));
  }
  return RadialOrbitalSet(grid, std::move(blocks));
}

}  // namespace dfta::macke
