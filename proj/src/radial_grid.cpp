#include "dftatoms/radial_grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace dfta {

namespace {

// Integrals of the four Lagrange basis polynomials through nodes
// x[k0..k0+3] over the cell [a, b], via 2-point Gauss-Legendre
// (exact for cubics).
std::array<double, 4> lagrange_cell_weights(const std::vector<double>& x,
                                            std::size_t k0, double a,
                                            double b) {
  static const double gl = 0.57735026918962576451;  // 1/sqrt(3)
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double q[2] = {mid - half * gl, mid + half * gl};
  std::array<double, 4> w{0.0, 0.0, 0.0, 0.0};
  for (double t : q) {
    for (int j = 0; j < 4; ++j) {
      double lj = 1.0;
      for (int m = 0; m < 4; ++m) {
        if (m == j) continue;
        lj *= (t - x[k0 + m]) / (x[k0 + j] - x[k0 + m]);
      }
      w[j] += half * lj;
    }
  }
  return w;
}

}  // namespace

std::vector<double> interpolatory_line_weights(
    const std::vector<double>& nodes) {
  const std::size_t n = nodes.size();
  std::vector<double> w(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t k0 = (i == 0) ? 0 : (i + 2 < n ? i - 1 : n - 4);
    auto cw = lagrange_cell_weights(nodes, k0, nodes[i], nodes[i + 1]);
    for (int j = 0; j < 4; ++j) w[k0 + j] += cw[j];
  }
  return w;
}

std::vector<double> interpolatory_line_prefix(const std::vector<double>& x,
                                              const std::vector<double>& f) {
  const std::size_t n = x.size();
  std::vector<double> out(n, 0.0);
  long double acc = 0.0L;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t k0 = (i == 0) ? 0 : (i + 2 < n ? i - 1 : n - 4);
    auto cw = lagrange_cell_weights(x, k0, x[i], x[i + 1]);
    long double cell = 0.0L;
    for (int j = 0; j < 4; ++j)
      cell += static_cast<long double>(cw[j]) * f[k0 + j];
    acc += cell;
    out[i + 1] = static_cast<double>(acc);
  }
  return out;
}

namespace {

std::vector<double> build_weights(const std::vector<double>& nodes) {
  auto w = interpolatory_line_weights(nodes);
  // Stub [0, r_0]: rectangle with the first sample.
  w[0] += nodes[0];
  return w;
}

}  // namespace

RadialGrid::RadialGrid(std::vector<double> nodes, GridSpacing spacing)
    : nodes_(std::move(nodes)), spacing_(spacing) {
  if (nodes_.size() < 16) throw std::invalid_argument("grid needs >= 16 nodes");
  weights_ = build_weights(nodes_);
  validate();
}

RadialGrid::RadialGrid(std::vector<double> nodes, std::vector<double> weights,
                       GridSpacing spacing)
    : nodes_(std::move(nodes)), weights_(std::move(weights)),
      spacing_(spacing) {
  if (nodes_.size() != weights_.size())
    throw std::invalid_argument("nodes/weights length mismatch");
  if (nodes_.size() < 16) throw std::invalid_argument("grid needs >= 16 nodes");
  validate();
}

void RadialGrid::validate() const {
  if (nodes_.front() <= 0.0)
    throw std::invalid_argument("grid nodes must be positive");
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
    if (nodes_[i + 1] <= nodes_[i])
      throw std::invalid_argument("grid nodes must be strictly increasing");
  for (double w : weights_)
    if (w <= 0.0) throw std::invalid_argument("grid weights must be positive");
}

RadialGrid RadialGrid::logarithmic(std::size_t n, double r_min, double r_max) {
  if (r_min <= 0.0 || r_max <= r_min)
    throw std::invalid_argument("need 0 < r_min < r_max");
  std::vector<double> nodes(n);
  const double step = std::log(r_max / r_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    nodes[i] = r_min * std::exp(step * static_cast<double>(i));
  nodes.back() = r_max;
  return RadialGrid(std::move(nodes), GridSpacing::logarithmic);
}

RadialGrid RadialGrid::uniform(std::size_t n, double r_max) {
  const double h = r_max / static_cast<double>(n);
  std::vector<double> nodes(n);
  for (std::size_t i = 0; i < n; ++i)
    nodes[i] = h * static_cast<double>(i + 1);
  return RadialGrid(std::move(nodes), GridSpacing::uniform);
}

RadialGrid RadialGrid::make_default() {
  return logarithmic(2000, 1e-6, 60.0);
}

bool RadialGrid::same_as(const RadialGrid& other) const {
  return nodes_ == other.nodes_ && weights_ == other.weights_;
}

double integrate_radial(const RadialGrid& grid,
                        const std::vector<double>& samples) {
  if (samples.size() != grid.size())
    throw std::invalid_argument("integrate_radial: sample length mismatch");
  // Pairwise-ish accumulation keeps the result deterministic and accurate.
  long double acc = 0.0L;
  const auto& w = grid.weights();
  for (std::size_t i = 0; i < samples.size(); ++i)
    acc += static_cast<long double>(w[i]) * samples[i];
  return static_cast<double>(acc);
}

std::vector<double> cumulative_integral(const RadialGrid& grid,
                                        const std::vector<double>& samples) {
  if (samples.size() != grid.size())
    throw std::invalid_argument("cumulative_integral: sample length mismatch");
  const auto& x = grid.nodes();
  const std::size_t n = x.size();
  std::vector<double> out(n, 0.0);
  long double acc = 0.0L;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t k0 = (i == 0) ? 0 : (i + 2 < n ? i - 1 : n - 4);
    auto cw = lagrange_cell_weights(x, k0, x[i], x[i + 1]);
    long double cell = 0.0L;
    for (int j = 0; j < 4; ++j) cell += static_cast<long double>(cw[j]) * samples[k0 + j];
    acc += cell;
    out[i + 1] = static_cast<double>(acc);
  }
  return out;
}

std::vector<double> radial_derivative(const RadialGrid& grid,
                                      const std::vector<double>& samples) {
  if (samples.size() != grid.size())
    throw std::invalid_argument("radial_derivative: sample length mismatch");
  const auto& r = grid.nodes();
  const std::size_t n = r.size();
  std::vector<double> d(n, 0.0);
  auto stencil5 = [&](std::size_t c, const std::array<std::ptrdiff_t, 5>& off,
                      const std::array<double, 5>& coef, double h) {
    double s = 0.0;
    for (int k = 0; k < 5; ++k) s += coef[k] * samples[c + off[k]];
    return s / h;
  };
  if (grid.spacing() == GridSpacing::logarithmic && n >= 5) {
    // d/dr = (1/r) d/dt with t = ln r uniform.
    const double h = std::log(r[1] / r[0]);
    for (std::size_t i = 0; i < n; ++i) {
      double dt;
      if (i >= 2 && i + 2 < n) {
        dt = stencil5(i, {-2, -1, 0, 1, 2},
                      {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12}, h);
      } else if (i == 0) {
        dt = stencil5(0, {0, 1, 2, 3, 4},
                      {-25.0 / 12, 4.0, -3.0, 4.0 / 3, -0.25}, h);
      } else if (i == 1) {
        dt = stencil5(1, {-1, 0, 1, 2, 3},
                      {-0.25, -5.0 / 6, 1.5, -0.5, 1.0 / 12}, h);
      } else if (i == n - 2) {
        dt = -stencil5(i, {1, 0, -1, -2, -3},
                       {-0.25, -5.0 / 6, 1.5, -0.5, 1.0 / 12}, h);
      } else {
        dt = -stencil5(i, {0, -1, -2, -3, -4},
                       {-25.0 / 12, 4.0, -3.0, 4.0 / 3, -0.25}, h);
      }
      d[i] = dt / r[i];
    }
    return d;
  }
  // Nonuniform 3-point stencils.
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t c = std::min(std::max<std::size_t>(i, 1), n - 2);
    const double x0 = r[c - 1], x1 = r[c], x2 = r[c + 1];
    const double f0 = samples[c - 1], f1 = samples[c], f2 = samples[c + 1];
    const double x = r[i];
    d[i] = f0 * (2 * x - x1 - x2) / ((x0 - x1) * (x0 - x2)) +
           f1 * (2 * x - x0 - x2) / ((x1 - x0) * (x1 - x2)) +
           f2 * (2 * x - x0 - x1) / ((x2 - x0) * (x2 - x1));
  }
  return d;
}

}  // namespace dfta
